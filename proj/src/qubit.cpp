#include "qcube/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcube {

std::string kappa_label(PauliEigenstate k) {
  switch (k) {
    case PauliEigenstate::Zero: return "0";
    case PauliEigenstate::One: return "1";
    case PauliEigenstate::Plus: return "+";
    case PauliEigenstate::Minus: return "-";
    case PauliEigenstate::PlusI: return "+i";
    case PauliEigenstate::MinusI: return "-i";
  }
  throw std::invalid_argument("bad eigenstate");
}

PauliEigenstate kappa_from_label(std::string_view s) {
  for (PauliEigenstate k : kKappaOrder)
    if (kappa_label(k) == s) return k;
  throw std::invalid_argument("bad eigenstate label: " + std::string(s));
}

Face face_of(PauliEigenstate k) {
  switch (k) {
    case PauliEigenstate::Zero: return Face::U;
    case PauliEigenstate::One: return Face::D;
    case PauliEigenstate::Plus: return Face::F;
    case PauliEigenstate::Minus: return Face::B;
    case PauliEigenstate::PlusI: return Face::R;
    case PauliEigenstate::MinusI: return Face::L;
  }
  throw std::invalid_argument("bad eigenstate");
}

PauliEigenstate kappa_of(Face f) {
  for (PauliEigenstate k : kKappaOrder)
    if (face_of(k) == f) return k;
  throw std::invalid_argument("bad face");
}

std::array<int, 3> kappa_axis_vector(PauliEigenstate k) { return face_axis_vector(face_of(k)); }

Axis axis_of(PauliEigenstate k) { return axis_of(face_of(k)); }

namespace {

Rat l1_norm(const std::array<Rat, 3>& r) { return abs(r[0]) + abs(r[1]) + abs(r[2]); }

}  // namespace

BlochState::BlochState(std::array<Rat, 3> r) : r_(std::move(r)) {
  if (l1_norm(r_) > 1) throw OutsideOctahedron("bloch vector has l1 norm above 1");
}

BlochState embed(const ProbVec8& p) {
  if (!membership(p).member)
    throw NotEpistemic("probability vector is not a mixture of face states");
  return BlochState(bloch_of(p));
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r.m[2 * i + j] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2 mat2_adjoint(const Mat2& a) {
  return Mat2{{std::conj(a(0, 0)), std::conj(a(1, 0)), std::conj(a(0, 1)), std::conj(a(1, 1))}};
}

double mat2_distance(const Mat2& a, const Mat2& b) {
  double d = 0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

namespace {

Mat2 mat2_of(Complex a, Complex b, Complex c, Complex d) { return Mat2{{a, b, c, d}}; }

const std::array<Mat2, 3>& pauli_matrices() {
  static const std::array<Mat2, 3> sigma = {
      mat2_of(0, 1, 1, 0),                             // x
      mat2_of(0, Complex(0, -1), Complex(0, 1), 0),    // y
      mat2_of(1, 0, 0, -1),                            // z
  };
  return sigma;
}

// (1/sqrt2)(I - i sigma_a)
Mat2 generator_unitary(Axis a) {
  const double s = 1.0 / std::sqrt(2.0);
  const Mat2& sigma = pauli_matrices()[static_cast<int>(a)];
  Mat2 r{};
  const Mat2 id = mat2_of(1, 0, 0, 1);
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = s * (id.m[i] - Complex(0, 1) * sigma.m[i]);
  return r;
}

}  // namespace

DensityMatrix density_of(const BlochState& b) {
  const double x = static_cast<double>(b.x());
  const double y = static_cast<double>(b.y());
  const double z = static_cast<double>(b.z());
  return DensityMatrix{Mat2{{Complex(0.5 * (1 + z), 0), Complex(0.5 * x, -0.5 * y),
                             Complex(0.5 * x, 0.5 * y), Complex(0.5 * (1 - z), 0)}}};
}

Rat born(PauliEigenstate k, const BlochState& b) {
  const auto n = kappa_axis_vector(k);
  Rat dot = n[0] * b.x() + n[1] * b.y() + n[2] * b.z();
  return (1 + dot) / 2;
}

double born_trace(PauliEigenstate k, const DensityMatrix& rho) {
  const auto n = kappa_axis_vector(k);
  // projector (I + n.sigma)/2
  const Mat2 proj = mat2_of(Complex(0.5 + 0.5 * n[2], 0), Complex(0.5 * n[0], -0.5 * n[1]),
                            Complex(0.5 * n[0], 0.5 * n[1]), Complex(0.5 - 0.5 * n[2], 0));
  Mat2 prod = mat2_mul(proj, rho.rho);
  return (prod(0, 0) + prod(1, 1)).real();
}

BlochState projective_update(Axis axis, PauliEigenstate outcome) {
  if (axis_of(outcome) != axis)
    throw OutcomeNotOnAxis("eigenstate " + kappa_label(outcome) +
                           " is not on the measured axis " + axis_letter(axis));
  const auto n = kappa_axis_vector(outcome);
  return BlochState({Rat(n[0]), Rat(n[1]), Rat(n[2])});
}

CliffordUnitary clifford_of(const Rotation& t) {
  const RotationGroup& group = RotationGroup::standard();
  std::size_t idx = group.index_of(t.perm);
  Mat2 u = mat2_of(1, 0, 0, 1);
  // element = g1 o g2 o ... o gk (BFS breadcrumbs from the element back to
  // the identity), so the unitary is the product in that order.
  while (idx != 0) {
    u = mat2_mul(u, generator_unitary(group.tree_generator(idx)));
    idx = group.tree_parent(idx);
  }
  return CliffordUnitary{u, t.matrix};
}

std::array<std::array<double, 3>, 3> adjoint_action(const Mat2& u) {
  std::array<std::array<double, 3>, 3> c{};
  const auto& sigma = pauli_matrices();
  const Mat2 udag = mat2_adjoint(u);
  for (int k = 0; k < 3; ++k) {
    Mat2 conj = mat2_mul(mat2_mul(u, sigma[k]), udag);
    for (int j = 0; j < 3; ++j) {
      Mat2 prod = mat2_mul(sigma[j], conj);
      c[j][k] = 0.5 * (prod(0, 0) + prod(1, 1)).real();
    }
  }
  return c;
}

bool equal_up_to_sign(const Mat2& u, const Mat2& v, double tol) {
  Mat2 neg{};
  for (std::size_t i = 0; i < 4; ++i) neg.m[i] = -v.m[i];
  return mat2_distance(u, v) <= tol || mat2_distance(u, neg) <= tol;
}

}  // namespace qcube
