#include "qcube/epistemic.hpp"

#include <stdexcept>

namespace qcube {

namespace {

constexpr int axis_index(Axis a) { return static_cast<int>(a); }

}  // namespace

Axis axis_of(Face f) {
  switch (f) {
    case Face::U:
    case Face::D: return Axis::Z;
    case Face::L:
    case Face::R: return Axis::Y;
    case Face::F:
    case Face::B: return Axis::X;
  }
  throw std::invalid_argument("bad face");
}

int sign_of(Face f) {
  switch (f) {
    case Face::U:
    case Face::R:
    case Face::F: return +1;
    default: return -1;
  }
}

Face opposite(Face f) { return face_from(axis_of(f), -sign_of(f)); }

Face face_from(Axis axis, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("face sign must be +-1");
  switch (axis) {
    case Axis::Z: return sign > 0 ? Face::U : Face::D;
    case Axis::Y: return sign > 0 ? Face::R : Face::L;
    case Axis::X: return sign > 0 ? Face::F : Face::B;
  }
  throw std::invalid_argument("bad axis");
}

char face_letter(Face f) {
  switch (f) {
    case Face::U: return 'U';
    case Face::D: return 'D';
    case Face::L: return 'L';
    case Face::R: return 'R';
    case Face::F: return 'F';
    case Face::B: return 'B';
  }
  throw std::invalid_argument("bad face");
}

Face face_from_letter(char c) {
  switch (c) {
    case 'U': return Face::U;
    case 'D': return Face::D;
    case 'L': return Face::L;
    case 'R': return Face::R;
    case 'F': return Face::F;
    case 'B': return Face::B;
  }
  throw std::invalid_argument(std::string("bad face letter: ") + c);
}

std::array<int, 3> face_axis_vector(Face f) {
  std::array<int, 3> n{};
  n[axis_index(axis_of(f))] = sign_of(f);
  return n;
}

const std::array<OnticState, 4>& face_vertices(Face f) {
  static const std::array<std::array<OnticState, 4>, 6> kTable = [] {
    std::array<std::array<OnticState, 4>, 6> t{};
    for (Face face : kFaceOrder) {
      int at = 0;
      for (int v = 1; v <= 8; ++v)
        if (face_contains(face, OnticState{v})) t[static_cast<int>(face)][at++] = OnticState{v};
    }
    return t;
  }();
  return kTable[static_cast<int>(f)];
}

bool face_contains(Face f, OnticState v) {
  return vertex_coords(v)[axis_index(axis_of(f))] == sign_of(f);
}

std::pair<Face, Face> measurement_faces(Measurement m) {
  return {face_from(m.axis, +1), face_from(m.axis, -1)};
}

ProbVec8 face_state(Face f) {
  Vec8 e{};
  for (OnticState v : face_vertices(f)) e[v.index - 1] = Rat(1, 4);
  return ProbVec8(e);
}

ProbVec8 transform(const Rotation& t, const ProbVec8& p) {
  Vec8 out{};
  for (int v = 1; v <= 8; ++v) out[t.perm(v) - 1] = p[v - 1];
  return ProbVec8(out);
}

Procedure measurement_for(const Rotation& t) {
  // The preparatory inverse rotation carries the tested pair onto (U, D):
  // the "up" answer fires exactly when the system sits on the image of U,
  // and the closing rotation leaves it there.
  std::array<int, 3> n = mat_apply(t.matrix, face_axis_vector(Face::U));
  Face first = [&] {
    for (int i = 0; i < 3; ++i)
      if (n[i] != 0) return face_from(static_cast<Axis>(i), n[i]);
    throw std::invalid_argument("degenerate rotation matrix");
  }();
  return Procedure{Measurement{axis_of(first)}, first, opposite(first)};
}

std::array<std::pair<Face, Rat>, 2> outcome_distribution(Measurement m, const ProbVec8& p) {
  auto [plus, minus] = measurement_faces(m);
  return {{{plus, 4 * inner(face_state(plus), p)}, {minus, 4 * inner(face_state(minus), p)}}};
}

ProbVec8 measurement_channel(Measurement m, const ProbVec8& p) {
  auto dist = outcome_distribution(m, p);
  Vec8 out{};
  for (const auto& [face, prob] : dist) {
    const ProbVec8 fs = face_state(face);
    for (std::size_t i = 0; i < 8; ++i) out[i] += prob * fs[i];
  }
  return ProbVec8(out);
}

ProbVec8 conditional_update(Measurement m, Face outcome) {
  if (axis_of(outcome) != m.axis)
    throw OutcomeNotOnAxis(std::string("outcome ") + face_letter(outcome) +
                           " is not on the measured axis " + axis_letter(m.axis));
  return face_state(outcome);
}

std::array<Rat, 3> bloch_of(const ProbVec8& p) {
  std::array<Rat, 3> r{};
  for (int a = 0; a < 3; ++a) {
    Rat acc = 0;
    for (int v = 1; v <= 8; ++v) acc += vertex_coords(OnticState{v})[a] * p[v - 1];
    r[a] = acc;
  }
  return r;
}

namespace {

Rat l1_norm(const std::array<Rat, 3>& r) {
  return abs(r[0]) + abs(r[1]) + abs(r[2]);
}

}  // namespace

ProbVec8 state_from_bloch(const std::array<Rat, 3>& r) {
  if (l1_norm(r) > 1)
    throw OutsideOctahedron("bloch vector has l1 norm above 1");
  Vec8 out{};
  for (int v = 1; v <= 8; ++v) {
    const auto& coords = vertex_coords(OnticState{v});
    Rat dot = coords[0] * r[0] + coords[1] * r[1] + coords[2] * r[2];
    out[v - 1] = (1 + dot) / 8;
  }
  return ProbVec8(out);
}

MembershipResult membership(const ProbVec8& p) {
  const std::array<Rat, 3> r = bloch_of(p);
  if (l1_norm(r) > 1) return {false, std::nullopt};
  if (!(state_from_bloch(r) == p)) return {false, std::nullopt};
  const Rat slack = (1 - l1_norm(r)) / 6;
  std::array<Rat, 6> w{};
  for (std::size_t k = 0; k < 6; ++k) {
    Face f = kFaceOrder[k];
    Rat reading = r[axis_index(axis_of(f))] * sign_of(f);
    w[k] = (reading > 0 ? reading : Rat(0)) + slack;
  }
  return {true, w};
}

EpistemicState::EpistemicState(ProbVec8 p) : p_(std::move(p)) {
  if (!membership(p_).member)
    throw NotEpistemic("probability vector is not a mixture of face states");
}

ProbVec8 state_from_weights(const std::array<Rat, 6>& weights) {
  Rat total = 0;
  for (const Rat& w : weights) {
    if (w < 0) throw InvalidWeights("negative face weight");
    total += w;
  }
  if (total != 1) throw InvalidWeights("face weights must sum to 1");
  Vec8 out{};
  for (std::size_t k = 0; k < 6; ++k) {
    const ProbVec8 fs = face_state(kFaceOrder[k]);
    for (std::size_t i = 0; i < 8; ++i) out[i] += weights[k] * fs[i];
  }
  return ProbVec8(out);
}

OnticMeasureResult ontic_measure(Measurement m, OnticState w, CounterRng& rng) {
  Face outcome = face_from(m.axis, vertex_coords(w)[axis_index(m.axis)]);
  OnticState next = face_vertices(outcome)[rng.uniform_below(4)];
  return {outcome, next};
}

std::array<Rat, 3> random_octahedron_point(CounterRng& rng) {
  for (;;) {
    std::array<Rat, 3> r;
    for (auto& c : r) {
      std::uint64_t den = 1 + rng.uniform_below(16);
      std::uint64_t span = 2 * den + 1;
      auto num = static_cast<long long>(rng.uniform_below(span)) - static_cast<long long>(den);
      c = Rat(num, static_cast<long long>(den));
    }
    if (l1_norm(r) <= 1) return r;
  }
}

ProbVec8 random_epistemic_state(CounterRng& rng) {
  return state_from_bloch(random_octahedron_point(rng));
}

}  // namespace qcube
