#pragma once

#include <array>
#include <cstddef>

#include "qcube/rational.hpp"

namespace qcube {

inline constexpr int kVertexCount = 8;

// Vertex label 1..8, matching the usual cube picture. Everything that is not
// a vertex label indexes 0-based.
struct OnticState {
  int index;

  friend bool operator==(OnticState, OnticState) = default;
};

bool valid_vertex(OnticState v);

// Antipode pairs are (1,7), (2,8), (3,5), (4,6).
OnticState antipode(OnticState v);

// Sign vector of the vertex in axis order (x, y, z), entries +-1.
const std::array<int, 3>& vertex_coords(OnticState v);

using Vec8 = std::array<Rat, 8>;

Rat inner(const Vec8& a, const Vec8& b);

// Probability vector over the 8 ontic states: entries >= 0 summing to 1.
// Immutable value type.
class ProbVec8 {
 public:
  explicit ProbVec8(Vec8 entries);

  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  const Rat& at(OnticState v) const;
  const Vec8& entries() const { return entries_; }

  friend bool operator==(const ProbVec8&, const ProbVec8&) = default;

 private:
  Vec8 entries_;
};

ProbVec8 extremal(OnticState v);
ProbVec8 uniform_state();
Rat inner(const ProbVec8& a, const ProbVec8& b);

// Column-stochastic 8x8 matrix acting on column vectors.
class StochasticMatrix8 {
 public:
  explicit StochasticMatrix8(std::array<Vec8, 8> rows);

  static StochasticMatrix8 identity();

  const Rat& entry(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  ProbVec8 apply(const ProbVec8& p) const;

  friend StochasticMatrix8 operator*(const StochasticMatrix8& a, const StochasticMatrix8& b);
  friend bool operator==(const StochasticMatrix8&, const StochasticMatrix8&) = default;

 private:
  std::array<Vec8, 8> rows_;
};

// The up/down test: block diagonal, two 4x4 blocks filled with 1/4.
StochasticMatrix8 basic_measurement_matrix();

ProbVec8 apply_matrix(const StochasticMatrix8& m, const ProbVec8& p);

}  // namespace qcube
