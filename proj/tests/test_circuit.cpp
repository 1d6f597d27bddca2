#include <doctest.h>

#include <cmath>

#include "qcube/circuit.hpp"
#include "qcube/serialize.hpp"

using namespace qcube;

namespace {

std::vector<TokenKind> kinds_of(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const Token& t : tokens) out.push_back(t.kind);
  return out;
}

CircuitErrorKind kind_of_error(const char* text) {
  try {
    (void)parse_text(text);
  } catch (const CircuitError& e) {
    return e.kind();
  }
  FAIL("expected a circuit error");
  return CircuitErrorKind::Parse;
}

}  // namespace

TEST_CASE("tokenizer output for simple statements") {
  const auto tokens = tokenize("prepare U # init");
  REQUIRE(tokens.size() == 3);  // prepare, U, end
  CHECK(tokens[0].kind == TokenKind::Keyword);
  CHECK(tokens[0].text == "prepare");
  CHECK(tokens[1].kind == TokenKind::FaceName);
  CHECK(tokens[1].text == "U");
  CHECK(tokens[2].kind == TokenKind::End);

  const auto mix = tokenize("mix U:1/2, D:1/2");
  CHECK(kinds_of(mix) == std::vector<TokenKind>{
                             TokenKind::Keyword, TokenKind::FaceName, TokenKind::Colon,
                             TokenKind::Number, TokenKind::Comma, TokenKind::FaceName,
                             TokenKind::Colon, TokenKind::Number, TokenKind::End});
  CHECK(mix[3].value == Rat(1, 2));
}

TEST_CASE("tokens carry positions; comments and separators are handled") {
  const auto tokens = tokenize("prepare U\n  rot y 90 # quarter\nmeasure z");
  CHECK(tokens[0].line == 1);
  CHECK(tokens[0].col == 1);
  const Token& rot = tokens[3];
  CHECK(rot.text == "rot");
  CHECK(rot.line == 2);
  CHECK(rot.col == 3);
  // ';' separates like a newline
  CHECK(parse_text("prepare U; measure z") == parse_text("prepare U\nmeasure z"));
}

TEST_CASE("unknown letters lex as identifiers and fail only at parse") {
  const auto tokens = tokenize("rot w 90");
  CHECK(tokens[1].kind == TokenKind::Ident);
  CHECK(tokens[1].text == "w");
  CHECK_THROWS_AS((void)parse_text("prepare U\nrot w 90"), CircuitError);
}

TEST_CASE("illegal characters raise lex errors with positions") {
  try {
    (void)tokenize("prepare U\nrot x @90");
    FAIL("expected a lex error");
  } catch (const CircuitError& e) {
    CHECK(e.kind() == CircuitErrorKind::Lex);
    CHECK(e.line() == 2);
    CHECK(e.col() == 7);
  }
}

TEST_CASE("parsing builds the expected statement list") {
  const Circuit c = parse_text("prepare U\nrot y 90\nmeasure z");
  CHECK(c.mode == Mode::Full);
  REQUIRE(c.statements.size() == 3);
  CHECK(std::get<PrepareStmt>(c.statements[0]).face == Face::U);
  const auto& rot = std::get<RotStmt>(c.statements[1]);
  CHECK(rot.axis == Axis::Y);
  CHECK(rot.quarter_turns == 1);
  const auto& meas = std::get<MeasureStmt>(c.statements[2]);
  CHECK(meas.axis == Axis::Z);
  CHECK(!meas.tag.has_value());
}

TEST_CASE("mode header, tags, and negative angles parse") {
  const Circuit c = parse_text("mode full\nmix U:1/3, D:2/3\nmeasure z as first\nrot x -180");
  CHECK(c.mode == Mode::Full);
  const auto& mix = std::get<MixStmt>(c.statements[0]);
  REQUIRE(mix.weights.size() == 2);
  CHECK(mix.weights[0] == std::pair{Face::U, Rat(1, 3)});
  CHECK(std::get<MeasureStmt>(c.statements[1]).tag == "first");
  CHECK(std::get<RotStmt>(c.statements[2]).quarter_turns == -2);
}

TEST_CASE("grammar violations raise the named error kinds") {
  CHECK(kind_of_error("mode classical\nprepare U\nrot x 90") ==
        CircuitErrorKind::ClassicalModeViolation);
  CHECK(kind_of_error("mode classical\nprepare U\nmeasure x") ==
        CircuitErrorKind::ClassicalModeViolation);
  CHECK(kind_of_error("mode classical\nprepare F") ==
        CircuitErrorKind::ClassicalModeViolation);
  CHECK(kind_of_error("prepare U\nrot x 45") == CircuitErrorKind::AngleNotQuarterTurn);
  CHECK(kind_of_error("prepare U\nrot x 360") == CircuitErrorKind::AngleNotQuarterTurn);
  CHECK(kind_of_error("mix U:1/2, D:1/3") == CircuitErrorKind::WeightsNotNormalized);
  CHECK(kind_of_error("measure z") == CircuitErrorKind::MissingPreparation);
  CHECK(kind_of_error("") == CircuitErrorKind::MissingPreparation);
  CHECK(kind_of_error("prepare U\nprepare D") == CircuitErrorKind::Parse);
  CHECK(kind_of_error("prepare U\nmeasure z as") == CircuitErrorKind::Parse);
  CHECK(kind_of_error("prepare q") == CircuitErrorKind::Parse);
}

TEST_CASE("error positions point at the offending token") {
  try {
    (void)parse_text("prepare U\nrot x 45");
    FAIL("expected an error");
  } catch (const CircuitError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 7);
    CHECK(std::string(e.what()).find("2:7") != std::string::npos);
  }
}

TEST_CASE("pretty print round trips the AST") {
  const char* sources[] = {
      "prepare U\nmeasure z",
      "mode classical\nmix U:1/3, D:2/3\nmeasure z\nmeasure z",
      "prepare L\nrot x -90\nrot z 270\nmeasure y as probe\nmeasure x",
      "mix F:1/2, B:1/4, U:1/4\nrot y 180\nmeasure z as a\nmeasure z as b",
  };
  for (const char* src : sources) {
    const Circuit c = parse_text(src);
    CHECK(parse_text(pretty_print(c)) == c);
  }
  CHECK(pretty_print(parse_text("prepare U; measure z")) == "mode full\nprepare U\nmeasure z\n");
}

TEST_CASE("exact evaluation of the landmark circuits") {
  const auto reproducible = eval_exact(parse_text("prepare U\nmeasure z"));
  REQUIRE(reproducible.size() == 1);
  CHECK(reproducible[0].probability == 1);
  CHECK(reproducible[0].outcomes.size() == 1);
  CHECK(reproducible[0].outcomes[0].face == Face::U);

  const auto split = eval_exact(parse_text("prepare U\nmeasure x\nmeasure z"));
  REQUIRE(split.size() == 4);
  const std::array<std::pair<Face, Face>, 4> expect = {{
      {Face::F, Face::U}, {Face::F, Face::D}, {Face::B, Face::U}, {Face::B, Face::D}}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(split[i].probability == Rat(1, 4));
    CHECK(split[i].outcomes[0].face == expect[i].first);
    CHECK(split[i].outcomes[1].face == expect[i].second);
  }

  const auto rotated = eval_exact(parse_text("prepare U\nrot y 90\nmeasure x"));
  REQUIRE(rotated.size() == 1);
  CHECK(rotated[0].probability == 1);
  CHECK(rotated[0].outcomes[0].face == Face::F);
}

TEST_CASE("branch probabilities sum to one and final states stay epistemic") {
  const char* sources[] = {
      "prepare U\nmeasure x\nmeasure y\nmeasure z",
      "mix U:1/3, F:1/3, L:1/3\nmeasure z\nrot x 90\nmeasure y",
      "prepare R\nrot z -90\nmeasure x\nrot y 180\nmeasure z",
  };
  for (const char* src : sources) {
    const auto branches = eval_exact(parse_text(src));
    Rat total = 0;
    for (const auto& br : branches) {
      total += br.probability;
      CHECK(br.probability > 0);
      CHECK(membership(br.final_state.prob()).member);
    }
    CHECK(total == 1);
  }
}

TEST_CASE("rot statements compile to repeated generator application") {
  CHECK(rotation_of(RotStmt{Axis::Y, 1}) == rotation_generator(Axis::Y));
  CHECK(rotation_of(RotStmt{Axis::Y, -1}) == inverse(rotation_generator(Axis::Y)));
  CHECK(rotation_of(RotStmt{Axis::Y, -2}) == rotation_of(RotStmt{Axis::Y, 2}));
  CHECK(rotation_of(RotStmt{Axis::Z, 3}) == inverse(rotation_generator(Axis::Z)));
}

TEST_CASE("zero-probability branches are pruned") {
  const auto branches = eval_exact(parse_text("prepare U\nmeasure z\nmeasure z"));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcomes.size() == 2);
  CHECK(branches[0].outcomes[0].face == Face::U);
  CHECK(branches[0].outcomes[1].face == Face::U);
}

TEST_CASE("classical mode reaches only the up/down mixtures") {
  for (const char* weights : {"1", "0", "1/3", "2/3", "1/4"}) {
    const Rat alpha = rat_from_string(weights);
    const std::string src = "mode classical\nmix U:" + to_string(alpha) +
                            ", D:" + to_string(1 - alpha) + "\nmeasure z\nmeasure z\nmeasure z";
    const auto branches = eval_exact(parse_text(src));
    CHECK(branches.size() <= 2);
    Rat mass_up = 0;
    for (const auto& br : branches) {
      // within a branch every outcome equals the first
      for (const auto& rec : br.outcomes) CHECK(rec.face == br.outcomes[0].face);
      const auto r = bloch_of(br.final_state.prob());
      CHECK(r[0] == 0);
      CHECK(r[1] == 0);
      if (br.outcomes[0].face == Face::U) mass_up += br.probability;
    }
    CHECK(mass_up == alpha);
  }
}

TEST_CASE("eval JSON matches the wire format byte for byte") {
  const Circuit c = parse_text("prepare U\nmeasure z");
  CHECK(eval_json(c, eval_exact(c)).dump() ==
        R"({"mode":"full","branches":[{"outcomes":[{"axis":"z","tag":null,"face":"U"}],)"
        R"("probability":"1","final_bloch":["0","0","1"]}]})");
  const Circuit tagged = parse_text("prepare F\nmeasure x as probe");
  CHECK(eval_json(tagged, eval_exact(tagged)).dump() ==
        R"({"mode":"full","branches":[{"outcomes":[{"axis":"x","tag":"probe","face":"F"}],)"
        R"("probability":"1","final_bloch":["1","0","0"]}]})");
}

TEST_CASE("sampling is deterministic and worker-count independent") {
  const Circuit c = parse_text("prepare U\nmeasure x\nmeasure z");
  const SampleResult a = sample(c, 20000, 99, 1);
  const SampleResult b = sample(c, 20000, 99, 1);
  CHECK(a.counts == b.counts);
  for (int threads : {2, 3, 8}) CHECK(sample(c, 20000, 99, threads).counts == a.counts);
  CHECK(sample_json(a).dump() == sample_json(b).dump());
  CHECK(sample(c, 20000, 100, 1).counts != a.counts);
}

TEST_CASE("sample JSON shape") {
  const Circuit c = parse_text("prepare U\nmeasure z");
  const Json j = sample_json(sample(c, 1000, 5));
  CHECK(j.dump() == R"({"shots":1000,"seed":5,"counts":{"U":1000}})");
}

TEST_CASE("deterministic branches sample exactly") {
  const auto result = sample(parse_text("prepare U\nmeasure z"), 1000, 1);
  REQUIRE(result.counts.size() == 1);
  CHECK(result.counts.at("U") == 1000);
}

TEST_CASE("sampler frequencies track the exact branch probabilities") {
  const char* sources[] = {
      "prepare U\nmeasure x",
      "prepare U\nmeasure x\nmeasure z",
      "mix U:1/2, F:1/2\nmeasure x",
  };
  const std::uint64_t shots = 100000;
  for (const char* src : sources) {
    const Circuit c = parse_text(src);
    const auto branches = eval_exact(c);
    const SampleResult result = sample(c, shots, 2024, 4);
    std::uint64_t counted = 0;
    for (const auto& br : branches) {
      std::string key;
      for (const auto& rec : br.outcomes) {
        if (!key.empty()) key += ',';
        key += face_letter(rec.face);
      }
      const double p = static_cast<double>(br.probability);
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(shots));
      const auto it = result.counts.find(key);
      const std::uint64_t n = it == result.counts.end() ? 0 : it->second;
      counted += n;
      const double freq = static_cast<double>(n) / static_cast<double>(shots);
      CHECK(std::abs(freq - p) <= 5 * sigma + 1e-9);
    }
    CHECK(counted == shots);  // no stray outcome sequences
  }
}
