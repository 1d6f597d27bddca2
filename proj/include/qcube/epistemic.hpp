#pragma once

#include <array>
#include <optional>

#include "qcube/errors.hpp"
#include "qcube/ontic.hpp"
#include "qcube/rng.hpp"
#include "qcube/rotation.hpp"

namespace qcube {

enum class Face { U, D, L, R, F, B };

// Canonical weight/report order for the six faces.
inline constexpr std::array<Face, 6> kFaceOrder = {Face::U, Face::D, Face::L,
                                                   Face::R, Face::F, Face::B};

Axis axis_of(Face f);
int sign_of(Face f);  // +1 or -1 along the face axis
Face opposite(Face f);
Face face_from(Axis axis, int sign);
char face_letter(Face f);
Face face_from_letter(char c);  // throws std::invalid_argument
// Outward unit normal as a signed integer vector.
std::array<int, 3> face_axis_vector(Face f);
// The four vertices of the face, ascending labels.
const std::array<OnticState, 4>& face_vertices(Face f);
bool face_contains(Face f, OnticState v);

// One of the three essentially different tests; outcomes are the two faces
// on the axis.
struct Measurement {
  Axis axis;

  friend bool operator==(Measurement, Measurement) = default;
};

std::pair<Face, Face> measurement_faces(Measurement m);  // (positive, negative)

// Uniform 1/4 over the four vertices of the face.
ProbVec8 face_state(Face f);

// Push-forward along the vertex action: (Tp)_{perm(i)} = p_i.
ProbVec8 transform(const Rotation& t, const ProbVec8& p);

// The measurement procedure induced by conjugating the basic test with t,
// with its outcome faces in procedure order. The first face is the one whose
// occupants answer "up" in the conjugated basic test.
struct Procedure {
  Measurement measurement;
  Face first;
  Face second;
};

Procedure measurement_for(const Rotation& t);

// Outcome probabilities 4 * <face_state(face), p>, positive face first.
std::array<std::pair<Face, Rat>, 2> outcome_distribution(Measurement m, const ProbVec8& p);

// Non-selective update: mixture of the two face states weighted by outcome
// probability. Idempotent.
ProbVec8 measurement_channel(Measurement m, const ProbVec8& p);

// Selective update; throws OutcomeNotOnAxis when the outcome face is not on
// the measured axis.
ProbVec8 conditional_update(Measurement m, Face outcome);

// Axis readings (x, y, z): each the probability difference of the opposite
// face pair.
std::array<Rat, 3> bloch_of(const ProbVec8& p);

// p_i = (1 + v_i . r) / 8; throws OutsideOctahedron when |r|_1 > 1.
ProbVec8 state_from_bloch(const std::array<Rat, 3>& r);

struct MembershipResult {
  bool member;
  // One convex decomposition over face states in kFaceOrder, when member.
  std::optional<std::array<Rat, 6>> weights;
};

// Decides p in the convex hull of the six face states via the closed-form
// reconstruction from its axis readings.
MembershipResult membership(const ProbVec8& p);

// A ProbVec8 checked to lie in the hull of the face states.
class EpistemicState {
 public:
  explicit EpistemicState(ProbVec8 p);  // throws NotEpistemic

  const ProbVec8& prob() const { return p_; }

  friend bool operator==(const EpistemicState&, const EpistemicState&) = default;

 private:
  ProbVec8 p_;
};

// Mix of face states with the given convex weights (kFaceOrder).
ProbVec8 state_from_weights(const std::array<Rat, 6>& weights);  // throws InvalidWeights

struct OnticMeasureResult {
  Face outcome;
  OnticState state;
};

// Single-system measurement: reveal the face on the measured axis holding
// the vertex, then rerandomize uniformly within it.
OnticMeasureResult ontic_measure(Measurement m, OnticState w, CounterRng& rng);

// Three rationals with denominators up to 16, rejection-sampled into the
// closed unit l1 ball.
std::array<Rat, 3> random_octahedron_point(CounterRng& rng);

ProbVec8 random_epistemic_state(CounterRng& rng);

}  // namespace qcube
