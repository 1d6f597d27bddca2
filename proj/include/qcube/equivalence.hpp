#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcube/qubit.hpp"

namespace qcube {

struct CheckFailure {
  std::string kind;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::size_t checks = 0;
  std::size_t passes = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  void merge(Report other);
  void record(bool pass, std::string kind, std::string inputs, std::string lhs, std::string rhs);
};

// Outcome probabilities of the face-pair test against the Born values of the
// embedded state, exact equality on both outcomes.
Report check_probability_equivalence(const ProbVec8& p, Measurement m);

// Exact: embed(transform(t, p)) equals matrix(t) * embed(p); float layer:
// the conjugated density matrices agree within 1e-12.
Report check_transformation_covariance(const Rotation& t, const ProbVec8& p);

// Two convex face-state decompositions of the same state map to the same
// Bloch vector; throws InvalidWeights when a tuple is not convex or the
// induced states differ.
Report check_well_definedness(const std::array<Rat, 6>& w, const std::array<Rat, 6>& w2);

struct SuiteOptions {
  int n_random = 200;
  std::uint64_t seed = 0;
};

// Everything above, exhaustively over the face states, rotations and
// measurements, plus seeded random octahedron states.
Report run_full_suite(SuiteOptions opts = {});

// Same sweep over a caller-supplied element set (fault-injection hook).
Report run_full_suite_over(std::span<const Rotation> elements, SuiteOptions opts = {});

}  // namespace qcube
