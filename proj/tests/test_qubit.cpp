#include <doctest.h>

#include <cmath>
#include <set>

#include "qcube/qubit.hpp"
#include "qcube/serialize.hpp"

using namespace qcube;

namespace {

constexpr double kTol = 1e-12;

Mat2 mat2_of(Complex a, Complex b, Complex c, Complex d) { return Mat2{{a, b, c, d}}; }

}  // namespace

TEST_CASE("kappa/face dictionary matches the correspondence table") {
  CHECK(face_of(PauliEigenstate::Zero) == Face::U);
  CHECK(face_of(PauliEigenstate::One) == Face::D);
  CHECK(face_of(PauliEigenstate::Plus) == Face::F);
  CHECK(face_of(PauliEigenstate::Minus) == Face::B);
  CHECK(face_of(PauliEigenstate::PlusI) == Face::R);
  CHECK(face_of(PauliEigenstate::MinusI) == Face::L);
  for (PauliEigenstate k : kKappaOrder) {
    CHECK(kappa_of(face_of(k)) == k);
    CHECK(kappa_from_label(kappa_label(k)) == k);
    CHECK(kappa_axis_vector(k) == face_axis_vector(face_of(k)));
  }
}

TEST_CASE("embedding landmark states") {
  CHECK(embed(face_state(Face::B)).vec() == std::array<Rat, 3>{-1, 0, 0});
  CHECK(embed(uniform_state()).vec() == std::array<Rat, 3>{0, 0, 0});
  CHECK_THROWS_AS(embed(extremal(OnticState{1})), NotEpistemic);
}

TEST_CASE("embedding is a bijection onto the octahedron") {
  CounterRng rng(71, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_octahedron_point(rng);
    const ProbVec8 p = state_from_bloch(r);
    CHECK(embed(p).vec() == r);
  }
  CHECK_THROWS_AS(BlochState({1, 1, 0}), OutsideOctahedron);
}

TEST_CASE("density matrices of landmark Bloch vectors") {
  const DensityMatrix zero = density_of(BlochState({0, 0, 1}));
  CHECK(mat2_distance(zero.rho, mat2_of(1, 0, 0, 0)) < kTol);
  const DensityMatrix plus = density_of(BlochState({1, 0, 0}));
  CHECK(mat2_distance(plus.rho, mat2_of(0.5, 0.5, 0.5, 0.5)) < kTol);
  const DensityMatrix mixed = density_of(BlochState({0, 0, 0}));
  CHECK(mat2_distance(mixed.rho, mat2_of(0.5, 0, 0, 0.5)) < kTol);
}

TEST_CASE("density matrices are hermitian, trace one, positive") {
  CounterRng rng(73, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochState b(random_octahedron_point(rng));
    const Mat2& rho = density_of(b).rho;
    CHECK(std::abs(rho(0, 0).imag()) < kTol);
    CHECK(std::abs(rho(1, 1).imag()) < kTol);
    CHECK(std::abs(rho(0, 1) - std::conj(rho(1, 0))) < kTol);
    CHECK(std::abs(rho(0, 0) + rho(1, 1) - Complex(1)) < kTol);
    // Eigenvalues of a 2x2 hermitian with trace 1: 1/2 +- sqrt(...)
    const double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, 0.25 - det));
    CHECK(0.5 - disc >= -kTol);
    CHECK(0.5 + disc <= 1 + kTol);
  }
}

TEST_CASE("born values on landmark pairs") {
  CHECK(born(PauliEigenstate::Zero, BlochState({0, 0, 1})) == 1);
  CHECK(born(PauliEigenstate::Plus, BlochState({0, 0, 1})) == Rat(1, 2));
  CHECK(born(PauliEigenstate::MinusI, BlochState({Rat(1, 2), 0, Rat(1, 2)})) == Rat(1, 2));
}

TEST_CASE("born rule agrees with the trace formula and normalizes exactly") {
  CounterRng rng(79, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochState b(random_octahedron_point(rng));
    const DensityMatrix rho = density_of(b);
    for (PauliEigenstate k : kKappaOrder) {
      const Rat exact = born(k, b);
      CHECK(std::abs(static_cast<double>(exact) - born_trace(k, rho)) < kTol);
      const PauliEigenstate opp = kappa_of(opposite(face_of(k)));
      CHECK(exact + born(opp, b) == 1);
    }
  }
}

TEST_CASE("projective update lands on the pure eigenstate") {
  CHECK(projective_update(Axis::Z, PauliEigenstate::One).vec() ==
        std::array<Rat, 3>{0, 0, -1});
  CHECK(projective_update(Axis::X, PauliEigenstate::Plus).vec() ==
        std::array<Rat, 3>{1, 0, 0});
  CHECK_THROWS_AS(projective_update(Axis::Z, PauliEigenstate::Plus), OutcomeNotOnAxis);
  // Mirrors the epistemic conditional update through the dictionary.
  for (PauliEigenstate k : kKappaOrder) {
    const Face f = face_of(k);
    const ProbVec8 updated = conditional_update(Measurement{axis_of(f)}, f);
    CHECK(bloch_of(updated) == projective_update(axis_of(f), k).vec());
  }
}

TEST_CASE("generator unitaries are the quoted (I - i sigma)/sqrt2 matrices") {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex mi(0, -1);
  const Mat2 expect_x = mat2_of(s, s * mi, s * mi, s);
  const Mat2 expect_z = mat2_of(s * (Complex(1) + mi), 0, 0, s * (Complex(1) - mi));
  CHECK(mat2_distance(clifford_of(rotation_generator(Axis::X)).u, expect_x) < kTol);
  CHECK(mat2_distance(clifford_of(rotation_generator(Axis::Z)).u, expect_z) < kTol);
}

TEST_CASE("clifford unitaries are unitary and deterministic") {
  for (const Rotation& t : RotationGroup::standard().elements()) {
    const Mat2 u = clifford_of(t).u;
    const Mat2 gram = mat2_mul(u, mat2_adjoint(u));
    CHECK(mat2_distance(gram, mat2_of(1, 0, 0, 1)) < kTol);
    CHECK(mat2_distance(u, clifford_of(t).u) == 0);
  }
}

TEST_CASE("adjoint action reproduces the exact rotation matrices") {
  for (const Rotation& t : RotationGroup::standard().elements()) {
    const auto action = adjoint_action(clifford_of(t).u);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(action[i][j] - t.matrix(i, j)) < kTol);
  }
}

TEST_CASE("the 24 unitaries form a projective representation") {
  const auto& elements = RotationGroup::standard().elements();
  for (const Rotation& a : elements)
    for (const Rotation& b : elements) {
      const Mat2 lhs = clifford_of(compose(a, b)).u;
      const Mat2 rhs = mat2_mul(clifford_of(a).u, clifford_of(b).u);
      CHECK(equal_up_to_sign(lhs, rhs, kTol));
    }
}

TEST_CASE("no two rotations share a unitary, even up to sign") {
  const auto& elements = RotationGroup::standard().elements();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      CHECK(!equal_up_to_sign(clifford_of(elements[i]).u, clifford_of(elements[j]).u, 1e-6));
}

TEST_CASE("every rotation maps the octahedron into itself") {
  CounterRng rng(83, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = random_octahedron_point(rng);
    for (const Rotation& t : RotationGroup::standard().elements()) {
      std::array<Rat, 3> moved{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) moved[i] += t.matrix(i, j) * r[j];
      CHECK(abs(moved[0]) + abs(moved[1]) + abs(moved[2]) <= 1);
    }
  }
}

TEST_CASE("density matrix serializes as 17-significant-digit pairs") {
  const Json j = density_json(density_of(BlochState({0, 0, 1})));
  REQUIRE(j.size() == 4);
  CHECK(j[0][0].get<std::string>() == "1");
  CHECK(j[3][0].get<std::string>() == "0");
  const Json third = density_json(density_of(BlochState({Rat(1, 3), 0, 0})));
  CHECK(third[1][0].get<std::string>() == "0.16666666666666666");
}
