#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcube/circuit.hpp"
#include "qcube/equivalence.hpp"
#include "qcube/qubit.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// qcube::Rat <-> fractions.Fraction (ints accepted on the way in). Floats are
// rejected so exactness survives the boundary.
template <>
struct type_caster<qcube::Rat> {
  PYBIND11_TYPE_CASTER(qcube::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;
    if (!PyLong_Check(src.ptr())) {
      object fraction_type = module_::import("fractions").attr("Fraction");
      if (!isinstance(src, fraction_type)) return false;
    }
    value = qcube::rat_from_string(str(src).cast<std::string>());
    return true;
  }

  static handle cast(const qcube::Rat& src, return_value_policy, handle) {
    object fraction_type = module_::import("fractions").attr("Fraction");
    return fraction_type(qcube::to_string(src)).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace qcube;

Face face_arg(const std::string& s) {
  if (s.size() != 1) throw std::invalid_argument("bad face letter: " + s);
  return face_from_letter(s[0]);
}

Axis axis_arg(const std::string& s) {
  if (s.size() != 1) throw std::invalid_argument("bad axis letter: " + s);
  return axis_from_letter(s[0]);
}

std::string face_str(Face f) { return std::string(1, face_letter(f)); }
std::string axis_str(Axis a) { return std::string(1, axis_letter(a)); }

std::array<Rat, 3> bloch_arg(const std::array<Rat, 3>& r) { return r; }

py::tuple bloch_tuple(const std::array<Rat, 3>& r) { return py::make_tuple(r[0], r[1], r[2]); }

py::list mat2_list(const Mat2& m) {
  py::list rows;
  for (std::size_t i = 0; i < 2; ++i) {
    py::list row;
    row.append(m(i, 0));
    row.append(m(i, 1));
    rows.append(row);
  }
  return rows;
}

py::list mat3_list(const Mat3& m) {
  py::list rows;
  for (std::size_t i = 0; i < 3; ++i) {
    py::list row;
    for (std::size_t j = 0; j < 3; ++j) row.append(m(i, j));
    rows.append(row);
  }
  return rows;
}

py::dict report_dict(const Report& report) {
  py::list failures;
  for (const auto& f : report.failures) {
    py::dict d;
    d["kind"] = f.kind;
    d["inputs"] = f.inputs;
    d["lhs"] = f.lhs;
    d["rhs"] = f.rhs;
    failures.append(d);
  }
  py::dict out;
  out["checks"] = report.checks;
  out["passes"] = report.passes;
  out["failures"] = failures;
  return out;
}

std::string prob_repr(const ProbVec8& p) {
  std::string s = "ProbVec8(";
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

PYBIND11_MODULE(_qcube, m) {
  m.doc() = "Exact simulator of the eight-state cube model and its qubit counterpart";
  m.attr("__version__") = "0.1.0";
  m.attr("FACES") = py::make_tuple("U", "D", "L", "R", "F", "B");
  m.attr("AXES") = py::make_tuple("x", "y", "z");
  m.attr("KAPPAS") = py::make_tuple("0", "1", "+", "-", "+i", "-i");

  py::register_exception<CircuitError>(m, "CircuitError", PyExc_ValueError);

  py::class_<ProbVec8>(m, "ProbVec8")
      .def(py::init([](const std::vector<Rat>& entries) {
             if (entries.size() != 8) throw std::invalid_argument("expected 8 entries");
             Vec8 e;
             std::copy(entries.begin(), entries.end(), e.begin());
             return ProbVec8(e);
           }),
           py::arg("entries"))
      .def("__getitem__",
           [](const ProbVec8& p, std::size_t i) {
             if (i >= 8) throw py::index_error();
             return p[i];
           })
      .def("__len__", [](const ProbVec8&) { return 8; })
      .def("probs",
           [](const ProbVec8& p) {
             py::list out;
             for (std::size_t i = 0; i < 8; ++i) out.append(p[i]);
             return out;
           })
      .def("__eq__", [](const ProbVec8& a, const ProbVec8& b) { return a == b; })
      .def("__repr__", &prob_repr);

  py::class_<Rotation>(m, "Rotation")
      .def_readonly("name", &Rotation::name)
      .def_property_readonly("perm",
                             [](const Rotation& r) {
                               py::list out;
                               for (int v = 1; v <= 8; ++v) out.append(r.perm(v));
                               return py::tuple(out);
                             })
      .def_property_readonly("matrix", [](const Rotation& r) { return mat3_list(r.matrix); })
      .def_property_readonly("cycles", [](const Rotation& r) { return cycle_notation(r.perm); })
      .def("inverse", [](const Rotation& r) { return inverse(r); })
      .def("__mul__", [](const Rotation& a, const Rotation& b) { return compose(a, b); })
      .def("__eq__", [](const Rotation& a, const Rotation& b) { return a == b; })
      .def("__repr__", [](const Rotation& r) { return "Rotation(" + r.name + ")"; });

  py::class_<CounterRng>(m, "CounterRng")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("shot") = 0)
      .def("next", &CounterRng::next)
      .def("uniform_below", &CounterRng::uniform_below, py::arg("n"));

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly(
          "mode", [](const Circuit& c) { return c.mode == Mode::Full ? "full" : "classical"; })
      .def("__len__", [](const Circuit& c) { return c.statements.size(); })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__str__", &pretty_print)
      .def("__repr__", [](const Circuit& c) { return "Circuit(\"\"\"" + pretty_print(c) + "\"\"\")"; });

  m.def("extremal", [](int vertex) { return extremal(OnticState{vertex}); }, py::arg("vertex"));
  m.def("uniform_state", &uniform_state);
  m.def("antipode", [](int vertex) { return antipode(OnticState{vertex}).index; },
        py::arg("vertex"));
  m.def("vertex_coords", [](int vertex) { return vertex_coords(OnticState{vertex}); },
        py::arg("vertex"));
  m.def("inner", [](const ProbVec8& a, const ProbVec8& b) { return inner(a, b); });
  m.def("face_state", [](const std::string& f) { return face_state(face_arg(f)); },
        py::arg("face"));
  m.def("opposite", [](const std::string& f) { return face_str(opposite(face_arg(f))); },
        py::arg("face"));
  m.def("face_vertices", [](const std::string& f) {
          py::list out;
          for (OnticState v : face_vertices(face_arg(f))) out.append(v.index);
          return out;
        },
        py::arg("face"));

  m.def("generator", [](const std::string& axis) { return rotation_generator(axis_arg(axis)); },
        py::arg("axis"));
  m.def("identity_rotation", &identity_rotation);
  m.def("group_elements", [] {
    py::list out;
    for (const Rotation& r : RotationGroup::standard().elements()) out.append(r);
    return out;
  });
  m.def("conjugacy_classes", [] {
    py::list out;
    for (const auto& cls : RotationGroup::standard().conjugacy_classes()) {
      py::dict d;
      d["kind"] = cls.kind;
      py::list members;
      for (auto i : cls.members) members.append(RotationGroup::standard().element(i).name);
      d["members"] = members;
      out.append(d);
    }
    return out;
  });
  m.def("element_order", [](const Rotation& r) {
    const auto& g = RotationGroup::standard();
    return g.element_order(g.index_of(r.perm));
  });
  m.def("diagonal_action", [](const Rotation& r) {
    auto a = diagonal_action(r.perm);
    return py::make_tuple(a[0], a[1], a[2], a[3]);
  });

  m.def("transform", [](const Rotation& t, const ProbVec8& p) { return transform(t, p); },
        py::arg("rotation"), py::arg("state"));
  m.def("measurement_for", [](const Rotation& t) {
    const Procedure proc = measurement_for(t);
    return py::make_tuple(axis_str(proc.measurement.axis), face_str(proc.first),
                          face_str(proc.second));
  });
  m.def("outcome_distribution",
        [](const std::string& axis, const ProbVec8& p) {
          py::dict out;
          for (const auto& [face, prob] : outcome_distribution(Measurement{axis_arg(axis)}, p))
            out[py::str(face_str(face))] = prob;
          return out;
        },
        py::arg("axis"), py::arg("state"));
  m.def("measurement_channel",
        [](const std::string& axis, const ProbVec8& p) {
          return measurement_channel(Measurement{axis_arg(axis)}, p);
        },
        py::arg("axis"), py::arg("state"));
  m.def("conditional_update",
        [](const std::string& axis, const std::string& outcome) {
          return conditional_update(Measurement{axis_arg(axis)}, face_arg(outcome));
        },
        py::arg("axis"), py::arg("outcome"));
  m.def("ontic_measure",
        [](const std::string& axis, int vertex, CounterRng& rng) {
          auto [outcome, next] = ontic_measure(Measurement{axis_arg(axis)}, OnticState{vertex}, rng);
          return py::make_tuple(face_str(outcome), next.index);
        },
        py::arg("axis"), py::arg("vertex"), py::arg("rng"));

  m.def("bloch_of", [](const ProbVec8& p) { return bloch_tuple(bloch_of(p)); }, py::arg("state"));
  m.def("state_from_bloch",
        [](const std::array<Rat, 3>& r) { return state_from_bloch(bloch_arg(r)); },
        py::arg("bloch"));
  m.def("membership", [](const ProbVec8& p) -> py::tuple {
    const MembershipResult res = membership(p);
    if (!res.member) return py::make_tuple(false, py::none());
    py::list w;
    for (const Rat& x : *res.weights) w.append(x);
    return py::make_tuple(true, w);
  });
  m.def("state_from_weights", [](const std::array<Rat, 6>& w) { return state_from_weights(w); },
        py::arg("weights"));
  m.def("random_epistemic_state", [](CounterRng& rng) { return random_epistemic_state(rng); });

  m.def("embed", [](const ProbVec8& p) { return bloch_tuple(embed(p).vec()); }, py::arg("state"));
  m.def("kappa_of", [](const std::string& f) { return kappa_label(kappa_of(face_arg(f))); },
        py::arg("face"));
  m.def("face_of", [](const std::string& k) { return face_str(face_of(kappa_from_label(k))); },
        py::arg("kappa"));
  m.def("born",
        [](const std::string& kappa, const std::array<Rat, 3>& r) {
          return born(kappa_from_label(kappa), BlochState(r));
        },
        py::arg("kappa"), py::arg("bloch"));
  m.def("density_of",
        [](const std::array<Rat, 3>& r) { return mat2_list(density_of(BlochState(r)).rho); },
        py::arg("bloch"));
  m.def("projective_update",
        [](const std::string& axis, const std::string& kappa) {
          return bloch_tuple(projective_update(axis_arg(axis), kappa_from_label(kappa)).vec());
        },
        py::arg("axis"), py::arg("outcome"));
  m.def("clifford_of", [](const Rotation& t) { return mat2_list(clifford_of(t).u); },
        py::arg("rotation"));

  m.def("check_probability_equivalence",
        [](const ProbVec8& p, const std::string& axis) {
          return report_dict(check_probability_equivalence(p, Measurement{axis_arg(axis)}));
        },
        py::arg("state"), py::arg("axis"));
  m.def("check_transformation_covariance",
        [](const Rotation& t, const ProbVec8& p) {
          return report_dict(check_transformation_covariance(t, p));
        },
        py::arg("rotation"), py::arg("state"));
  m.def("check_well_definedness",
        [](const std::array<Rat, 6>& w, const std::array<Rat, 6>& w2) {
          return report_dict(check_well_definedness(w, w2));
        },
        py::arg("weights"), py::arg("weights2"));
  m.def("verify",
        [](int n_random, std::uint64_t seed) {
          return report_dict(run_full_suite(SuiteOptions{n_random, seed}));
        },
        py::arg("n_random") = 200, py::arg("seed") = 0);

  m.def("parse_circuit", [](const std::string& text) { return parse_text(text); },
        py::arg("text"));
  m.def("pretty_print", &pretty_print, py::arg("circuit"));
  m.def("eval_exact",
        [](const Circuit& c) {
          py::list out;
          for (const BranchOutcome& br : eval_exact(c)) {
            py::list outcomes;
            for (const OutcomeRecord& rec : br.outcomes) {
              py::dict o;
              o["axis"] = axis_str(rec.axis);
              o["tag"] = rec.tag ? py::object(py::str(*rec.tag)) : py::object(py::none());
              o["face"] = face_str(rec.face);
              outcomes.append(o);
            }
            py::dict b;
            b["outcomes"] = outcomes;
            b["probability"] = br.probability;
            b["final_state"] = br.final_state.prob();
            b["final_bloch"] = bloch_tuple(bloch_of(br.final_state.prob()));
            out.append(b);
          }
          return out;
        },
        py::arg("circuit"));
  m.def("sample",
        [](const Circuit& c, std::uint64_t shots, std::uint64_t seed, int threads) {
          const SampleResult result = sample(c, shots, seed, threads);
          py::dict out;
          for (const auto& [key, n] : result.counts) out[py::str(key)] = n;
          return out;
        },
        py::arg("circuit"), py::arg("shots"), py::arg("seed") = 0, py::arg("threads") = 1);
}
