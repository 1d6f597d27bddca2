#include "qcube/equivalence.hpp"

#include <utility>

namespace qcube {

void Report::merge(Report other) {
  checks += other.checks;
  passes += other.passes;
  for (auto& f : other.failures) failures.push_back(std::move(f));
}

void Report::record(bool pass, std::string kind, std::string inputs, std::string lhs,
                    std::string rhs) {
  ++checks;
  if (pass)
    ++passes;
  else
    failures.push_back(CheckFailure{std::move(kind), std::move(inputs), std::move(lhs), std::move(rhs)});
}

namespace {

std::string prob_text(const ProbVec8& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) s += ',';
    s += to_string(p[i]);
  }
  return s + ")";
}

std::string bloch_text(const std::array<Rat, 3>& r) {
  return "(" + to_string(r[0]) + "," + to_string(r[1]) + "," + to_string(r[2]) + ")";
}

std::string dist_text(const std::array<std::pair<Face, Rat>, 2>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < 2; ++i) {
    if (i) s += ',';
    s += face_letter(d[i].first);
    s += ':';
    s += to_string(d[i].second);
  }
  return s + "}";
}

std::string weights_text(const std::array<Rat, 6>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) s += ',';
    s += to_string(w[i]);
  }
  return s + ")";
}

constexpr double kFloatTol = 1e-12;

}  // namespace

Report check_probability_equivalence(const ProbVec8& p, Measurement m) {
  Report report;
  const BlochState b = embed(p);
  const auto dist = outcome_distribution(m, p);
  std::array<std::pair<Face, Rat>, 2> born_side;
  bool equal = true;
  for (std::size_t i = 0; i < 2; ++i) {
    Rat via_born = born(kappa_of(dist[i].first), b);
    born_side[i] = {dist[i].first, via_born};
    equal = equal && via_born == dist[i].second;
  }
  report.record(equal, "probability",
                "p=" + prob_text(p) + " axis=" + axis_letter(m.axis), dist_text(dist),
                dist_text(born_side));
  return report;
}

Report check_transformation_covariance(const Rotation& t, const ProbVec8& p) {
  Report report;
  const ProbVec8 moved = transform(t, p);
  const std::array<Rat, 3> lhs = bloch_of(moved);
  const std::array<Rat, 3> r = bloch_of(p);
  std::array<Rat, 3> rhs{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rhs[i] += t.matrix(i, j) * r[j];
  report.record(lhs == rhs, "covariance", "t=" + t.name + " p=" + prob_text(p),
                bloch_text(lhs), bloch_text(rhs));

  // Float layer: conjugation by the unitary image.
  const CliffordUnitary cu = clifford_of(t);
  const Mat2 conjugated =
      mat2_mul(mat2_mul(cu.u, density_of(BlochState(r)).rho), mat2_adjoint(cu.u));
  const Mat2 direct = density_of(BlochState(lhs)).rho;
  const double dist = mat2_distance(conjugated, direct);
  report.record(dist <= kFloatTol, "covariance-density", "t=" + t.name + " p=" + prob_text(p),
                "|U rho Udag - rho'| = " + std::to_string(dist), "<= 1e-12");
  return report;
}

Report check_well_definedness(const std::array<Rat, 6>& w, const std::array<Rat, 6>& w2) {
  Report report;
  const ProbVec8 p1 = state_from_weights(w);
  const ProbVec8 p2 = state_from_weights(w2);
  if (!(p1 == p2)) throw InvalidWeights("weight tuples induce different states");
  std::array<Rat, 3> b1{}, b2{};
  for (std::size_t k = 0; k < 6; ++k) {
    const auto n = face_axis_vector(kFaceOrder[k]);
    for (int i = 0; i < 3; ++i) {
      b1[i] += w[k] * n[i];
      b2[i] += w2[k] * n[i];
    }
  }
  report.record(b1 == b2, "well-definedness", "w=" + weights_text(w) + " w'=" + weights_text(w2),
                bloch_text(b1), bloch_text(b2));
  return report;
}

namespace {

// Kernel of the weight-to-state map in kFaceOrder (U,D,L,R,F,B): moving mass
// between opposite-face pairs leaves the mixture unchanged.
constexpr std::array<std::array<int, 6>, 2> kWeightKernel = {{
    {1, 1, -1, -1, 0, 0},
    {1, 1, 0, 0, -1, -1},
}};

std::array<Rat, 6> perturb_weights(const std::array<Rat, 6>& w, CounterRng& rng) {
  const Rat a = w[0] < w[1] ? w[0] : w[1];  // min over the U,D pair
  const Rat b = w[2] < w[3] ? w[2] : w[3];
  const Rat c = w[4] < w[5] ? w[4] : w[5];
  const Rat s_lo = -a / 2, s_hi = b;
  const Rat s = s_lo + (s_hi - s_lo) * Rat(rng.uniform_below(9), 8);
  const Rat t_lo = -a - s, t_hi = c;
  const Rat t = t_lo + (t_hi - t_lo) * Rat(rng.uniform_below(9), 8);
  std::array<Rat, 6> out = w;
  for (std::size_t k = 0; k < 6; ++k) out[k] += s * kWeightKernel[0][k] + t * kWeightKernel[1][k];
  return out;
}

}  // namespace

Report run_full_suite(SuiteOptions opts) {
  return run_full_suite_over(RotationGroup::standard().elements(), opts);
}

Report run_full_suite_over(std::span<const Rotation> elements, SuiteOptions opts) {
  Report report;

  std::vector<ProbVec8> states;
  for (Face f : kFaceOrder) states.push_back(face_state(f));
  CounterRng rng(opts.seed, 0);
  for (int i = 0; i < opts.n_random; ++i) states.push_back(random_epistemic_state(rng));

  for (const ProbVec8& p : states)
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z})
      report.merge(check_probability_equivalence(p, Measurement{axis}));

  for (const ProbVec8& p : states)
    for (const Rotation& t : elements) report.merge(check_transformation_covariance(t, p));

  for (int i = 0; i < opts.n_random; ++i) {
    const ProbVec8 p = random_epistemic_state(rng);
    const auto w = membership(p).weights.value();
    const auto w2 = perturb_weights(w, rng);
    report.merge(check_well_definedness(w, w2));
  }
  return report;
}

}  // namespace qcube
