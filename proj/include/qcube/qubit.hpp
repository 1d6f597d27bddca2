#pragma once

#include <array>
#include <complex>
#include <string>

#include "qcube/epistemic.hpp"

namespace qcube {

// Eigenstates of the Pauli operators; the kappa labels of the octahedron
// vertices.
enum class PauliEigenstate { Zero, One, Plus, Minus, PlusI, MinusI };

inline constexpr std::array<PauliEigenstate, 6> kKappaOrder = {
    PauliEigenstate::Zero, PauliEigenstate::One,   PauliEigenstate::Plus,
    PauliEigenstate::Minus, PauliEigenstate::PlusI, PauliEigenstate::MinusI};

std::string kappa_label(PauliEigenstate k);            // "0","1","+","-","+i","-i"
PauliEigenstate kappa_from_label(std::string_view s);  // throws std::invalid_argument

// Dictionary with the face states: U<->0, D<->1, F<->+, B<->-, R<->+i, L<->-i.
Face face_of(PauliEigenstate k);
PauliEigenstate kappa_of(Face f);

// Unit Bloch axis of the eigenstate (+z for 0, +x for +, +y for +i, ...).
std::array<int, 3> kappa_axis_vector(PauliEigenstate k);
Axis axis_of(PauliEigenstate k);

// Exact rational Bloch vector confined to the octahedron |r|_1 <= 1.
class BlochState {
 public:
  explicit BlochState(std::array<Rat, 3> r);  // throws OutsideOctahedron

  const std::array<Rat, 3>& vec() const { return r_; }
  const Rat& x() const { return r_[0]; }
  const Rat& y() const { return r_[1]; }
  const Rat& z() const { return r_[2]; }

  friend bool operator==(const BlochState&, const BlochState&) = default;

 private:
  std::array<Rat, 3> r_;
};

// The octahedron image of an epistemic state; throws NotEpistemic outside
// the hull of face states.
BlochState embed(const ProbVec8& p);

using Complex = std::complex<double>;

// Row-major 2x2 complex matrix; floating-point cross-check layer.
struct Mat2 {
  std::array<Complex, 4> m;

  Complex operator()(std::size_t row, std::size_t col) const { return m[2 * row + col]; }
};

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_adjoint(const Mat2& a);
double mat2_distance(const Mat2& a, const Mat2& b);  // max entrywise abs difference

struct DensityMatrix {
  Mat2 rho;
};

// (I + r.sigma)/2 as floats.
DensityMatrix density_of(const BlochState& b);

// Born probability (1 + n_kappa . r)/2, exact.
Rat born(PauliEigenstate k, const BlochState& b);

// Born probability from the trace formula with the float density matrix.
double born_trace(PauliEigenstate k, const DensityMatrix& rho);

// Post-measurement state: the pure eigenstate on the measured axis; throws
// OutcomeNotOnAxis otherwise.
BlochState projective_update(Axis axis, PauliEigenstate outcome);

// Unitary image of a rotation plus its exact SO(3) action on the Pauli axes.
struct CliffordUnitary {
  Mat2 u;
  Mat3 so3;
};

// Product of generator unitaries (1/sqrt2)(I - i sigma_a) along the group's
// BFS spanning tree; phases deterministic, representation projective.
CliffordUnitary clifford_of(const Rotation& t);

// Coefficients c[j][k] = Re(tr(sigma_j U sigma_k U^dag))/2, the measured
// adjoint action of u on the Pauli axes.
std::array<std::array<double, 3>, 3> adjoint_action(const Mat2& u);

// True when u and v agree entrywise up to an overall sign, within tol.
bool equal_up_to_sign(const Mat2& u, const Mat2& v, double tol);

}  // namespace qcube
