#include "qcube/ontic.hpp"

#include <stdexcept>

namespace qcube {

namespace {

// One fixed chart: face membership (z=+1 is U, y=+1 is R, x=+1 is F)
// reproduces U={1,2,3,4}, D={5,6,7,8}, L={1,4,5,8}, R={2,3,6,7},
// F={1,2,5,6}, B={3,4,7,8}.
constexpr std::array<std::array<int, 3>, 8> kVertexCoords = {{
    {+1, -1, +1},  // 1
    {+1, +1, +1},  // 2
    {-1, +1, +1},  // 3
    {-1, -1, +1},  // 4
    {+1, -1, -1},  // 5
    {+1, +1, -1},  // 6
    {-1, +1, -1},  // 7
    {-1, -1, -1},  // 8
}};

void check_vertex(OnticState v) {
  if (!valid_vertex(v)) throw std::invalid_argument("vertex label out of range 1..8");
}

}  // namespace

bool valid_vertex(OnticState v) { return v.index >= 1 && v.index <= 8; }

OnticState antipode(OnticState v) {
  check_vertex(v);
  static constexpr std::array<int, 8> kAntipode = {7, 8, 5, 6, 3, 4, 1, 2};
  return OnticState{kAntipode[v.index - 1]};
}

const std::array<int, 3>& vertex_coords(OnticState v) {
  check_vertex(v);
  return kVertexCoords[v.index - 1];
}

Rat inner(const Vec8& a, const Vec8& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < 8; ++i) acc += a[i] * b[i];
  return acc;
}

ProbVec8::ProbVec8(Vec8 entries) : entries_(std::move(entries)) {
  Rat total = 0;
  for (const Rat& e : entries_) {
    if (e < 0) throw std::invalid_argument("negative probability entry");
    total += e;
  }
  if (total != 1) throw std::invalid_argument("probability entries must sum to 1");
}

const Rat& ProbVec8::at(OnticState v) const {
  check_vertex(v);
  return entries_[v.index - 1];
}

ProbVec8 extremal(OnticState v) {
  check_vertex(v);
  Vec8 e{};
  e[v.index - 1] = 1;
  return ProbVec8(e);
}

ProbVec8 uniform_state() {
  Vec8 e;
  e.fill(Rat(1, 8));
  return ProbVec8(e);
}

Rat inner(const ProbVec8& a, const ProbVec8& b) { return inner(a.entries(), b.entries()); }

StochasticMatrix8::StochasticMatrix8(std::array<Vec8, 8> rows) : rows_(std::move(rows)) {
  for (std::size_t col = 0; col < 8; ++col) {
    Rat total = 0;
    for (std::size_t row = 0; row < 8; ++row) {
      if (rows_[row][col] < 0) throw std::invalid_argument("negative matrix entry");
      total += rows_[row][col];
    }
    if (total != 1) throw std::invalid_argument("matrix column must sum to 1");
  }
}

StochasticMatrix8 StochasticMatrix8::identity() {
  std::array<Vec8, 8> rows{};
  for (std::size_t i = 0; i < 8; ++i) rows[i][i] = 1;
  return StochasticMatrix8(rows);
}

ProbVec8 StochasticMatrix8::apply(const ProbVec8& p) const {
  Vec8 out{};
  for (std::size_t row = 0; row < 8; ++row) out[row] = inner(rows_[row], p.entries());
  return ProbVec8(out);
}

StochasticMatrix8 operator*(const StochasticMatrix8& a, const StochasticMatrix8& b) {
  std::array<Vec8, 8> rows{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Rat acc = 0;
      for (std::size_t k = 0; k < 8; ++k) acc += a.rows_[i][k] * b.rows_[k][j];
      rows[i][j] = acc;
    }
  return StochasticMatrix8(rows);
}

StochasticMatrix8 basic_measurement_matrix() {
  std::array<Vec8, 8> rows{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if ((i < 4) == (j < 4)) rows[i][j] = Rat(1, 4);
  return StochasticMatrix8(rows);
}

ProbVec8 apply_matrix(const StochasticMatrix8& m, const ProbVec8& p) { return m.apply(p); }

}  // namespace qcube
