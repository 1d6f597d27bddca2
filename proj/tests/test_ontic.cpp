#include <doctest.h>

#include "oracle_helpers.hpp"
#include "qcube/ontic.hpp"
#include "qcube/serialize.hpp"

using namespace qcube;

TEST_CASE("extremal states are basis vectors") {
  const ProbVec8 e1 = extremal(OnticState{1});
  CHECK(e1[0] == 1);
  for (int i = 1; i < 8; ++i) CHECK(e1[i] == 0);
  const ProbVec8 e8 = extremal(OnticState{8});
  CHECK(e8[7] == 1);
  CHECK(e8.at(OnticState{8}) == 1);
  CHECK_THROWS_AS(extremal(OnticState{0}), std::invalid_argument);
  CHECK_THROWS_AS(extremal(OnticState{9}), std::invalid_argument);
}

TEST_CASE("inner products of extremal and face states") {
  CHECK(inner(extremal(OnticState{1}), extremal(OnticState{2})) == 0);
  CHECK(inner(face_state(Face::U), face_state(Face::U)) == Rat(1, 4));
  CHECK(inner(face_state(Face::U), face_state(Face::F)) == Rat(1, 8));
}

TEST_CASE("inner against an extremal state projects out the entry") {
  CounterRng rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ProbVec8 p = oracle::random_simplex_point(rng);
    for (int v = 1; v <= 8; ++v)
      CHECK(inner(extremal(OnticState{v}), p) == p.at(OnticState{v}));
  }
}

TEST_CASE("antipode is an involution with the fixed pairing") {
  const std::array<std::pair<int, int>, 4> pairs = {{{1, 7}, {2, 8}, {3, 5}, {4, 6}}};
  for (auto [a, b] : pairs) {
    CHECK(antipode(OnticState{a}) == OnticState{b});
    CHECK(antipode(OnticState{b}) == OnticState{a});
  }
  for (int v = 1; v <= 8; ++v) CHECK(antipode(antipode(OnticState{v})) == OnticState{v});
}

TEST_CASE("vertex coordinates flip sign at the antipode") {
  for (int v = 1; v <= 8; ++v) {
    const auto& c = vertex_coords(OnticState{v});
    const auto& opp = vertex_coords(antipode(OnticState{v}));
    for (int i = 0; i < 3; ++i) {
      CHECK(c[i] * c[i] == 1);
      CHECK(opp[i] == -c[i]);
    }
  }
}

TEST_CASE("face sets from the chart match the cube picture") {
  auto set_of = [](Face f) {
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) s[i] = face_vertices(f)[i].index;
    return s;
  };
  CHECK(set_of(Face::U) == std::array<int, 4>{1, 2, 3, 4});
  CHECK(set_of(Face::D) == std::array<int, 4>{5, 6, 7, 8});
  CHECK(set_of(Face::L) == std::array<int, 4>{1, 4, 5, 8});
  CHECK(set_of(Face::R) == std::array<int, 4>{2, 3, 6, 7});
  CHECK(set_of(Face::F) == std::array<int, 4>{1, 2, 5, 6});
  CHECK(set_of(Face::B) == std::array<int, 4>{3, 4, 7, 8});
}

TEST_CASE("every vertex lies on exactly three faces; opposite faces partition") {
  for (int v = 1; v <= 8; ++v) {
    int count = 0;
    for (Face f : kFaceOrder) count += face_contains(f, OnticState{v});
    CHECK(count == 3);
  }
  for (Face f : {Face::U, Face::L, Face::F}) {
    for (int v = 1; v <= 8; ++v)
      CHECK((face_contains(f, OnticState{v}) != face_contains(opposite(f), OnticState{v})));
  }
}

TEST_CASE("probability vector invariants are enforced") {
  Vec8 negative{};
  negative[0] = Rat(3, 2);
  negative[1] = Rat(-1, 2);
  CHECK_THROWS_AS((void)ProbVec8(negative), std::invalid_argument);
  Vec8 short_mass{};
  short_mass[0] = Rat(1, 2);
  CHECK_THROWS_AS((void)ProbVec8(short_mass), std::invalid_argument);
}

TEST_CASE("basic measurement matrix entries follow the block form") {
  const StochasticMatrix8 m1 = basic_measurement_matrix();
  CHECK(m1.entry(0, 2) == Rat(1, 4));  // vertices 1,3
  CHECK(m1.entry(0, 4) == 0);          // vertices 1,5
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(m1.entry(i, j) == ((i < 4) == (j < 4) ? Rat(1, 4) : Rat(0)));
}

TEST_CASE("basic measurement matrix is idempotent and symmetric") {
  const StochasticMatrix8 m1 = basic_measurement_matrix();
  CHECK(m1 * m1 == m1);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(m1.entry(i, j) == m1.entry(j, i));
}

TEST_CASE("applying the basic measurement to known states") {
  const StochasticMatrix8 m1 = basic_measurement_matrix();
  CHECK(apply_matrix(m1, extremal(OnticState{3})) == face_state(Face::U));
  CHECK(apply_matrix(m1, face_state(Face::D)) == face_state(Face::D));
  CHECK(apply_matrix(m1, face_state(Face::F)) == uniform_state());
}

TEST_CASE("stochastic application preserves the simplex") {
  const StochasticMatrix8 m1 = basic_measurement_matrix();
  CounterRng rng(23, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const ProbVec8 p = oracle::random_simplex_point(rng);
    const ProbVec8 q = apply_matrix(m1, p);  // ProbVec8 constructor re-checks invariants
    Rat total = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(q[i] >= 0);
      total += q[i];
    }
    CHECK(total == 1);
  }
}

TEST_CASE("matrix invariants are enforced") {
  std::array<Vec8, 8> rows{};
  for (std::size_t i = 0; i < 8; ++i) rows[i][i] = Rat(1, 2);
  CHECK_THROWS_AS((void)StochasticMatrix8(rows), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
  CHECK(to_string(Rat(1, 4)) == "1/4");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(to_string(Rat(-2, 6)) == "-1/3");
  CHECK(to_string(Rat(2)) == "2");
  CHECK(rat_from_string("3/9") == Rat(1, 3));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
}

TEST_CASE("probability vector JSON uses lowest-term strings") {
  CHECK(prob_json(face_state(Face::U)).dump() ==
        R"(["1/4","1/4","1/4","1/4","0","0","0","0"])");
  CounterRng rng(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ProbVec8 p = oracle::random_simplex_point(rng);
    CHECK(prob_from_json(prob_json(p)) == p);
  }
}
