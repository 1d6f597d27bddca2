from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "qcube._qcube",
    sources=[
        "src/rational.cpp",
        "src/ontic.cpp",
        "src/rotation.cpp",
        "src/epistemic.cpp",
        "src/qubit.cpp",
        "src/equivalence.cpp",
        "src/circuit.cpp",
        "src/serialize.cpp",
        "bindings/qcube_py.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
