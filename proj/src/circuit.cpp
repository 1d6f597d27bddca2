#include "qcube/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <thread>

namespace qcube {

namespace {

std::string kind_word(CircuitErrorKind kind) {
  switch (kind) {
    case CircuitErrorKind::Lex: return "lex error";
    case CircuitErrorKind::Parse: return "parse error";
    case CircuitErrorKind::WeightsNotNormalized: return "weights not normalized";
    case CircuitErrorKind::AngleNotQuarterTurn: return "angle not a quarter turn";
    case CircuitErrorKind::ClassicalModeViolation: return "classical mode violation";
    case CircuitErrorKind::MissingPreparation: return "missing preparation";
  }
  return "error";
}

}  // namespace

CircuitError::CircuitError(CircuitErrorKind kind, int line, int col, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " +
                         kind_word(kind) + ": " + message),
      kind_(kind),
      line_(line),
      col_(col) {}

namespace {

const char* const kKeywords[] = {"mode", "full", "classical", "prepare",
                                 "mix",  "rot",  "measure",   "as"};

bool is_keyword(const std::string& w) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), w) != std::end(kKeywords);
}

bool is_face_name(const std::string& w) {
  return w.size() == 1 && std::string("UDLRFB").find(w[0]) != std::string::npos;
}

bool is_axis_name(const std::string& w) {
  return w.size() == 1 && std::string("xyz").find(w[0]) != std::string::npos;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::string word, Rat value, int at_col) {
    tokens.push_back(Token{kind, std::move(word), std::move(value), line, at_col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n' || c == ';') {
      push(TokenKind::Newline, std::string(1, c), 0, col);
      ++i;
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == ',') {
      push(TokenKind::Comma, ",", 0, col);
      ++i;
      ++col;
      continue;
    }
    if (c == ':') {
      push(TokenKind::Colon, ":", 0, col);
      ++i;
      ++col;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      int at = col;
      std::string word(1, c);
      ++i;
      ++col;
      auto take_digits = [&] {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          word += text[i++];
          ++col;
        }
      };
      take_digits();
      if (i + 1 < text.size() && text[i] == '/' &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        word += text[i++];
        ++col;
        take_digits();
      }
      push(TokenKind::Number, word, rat_from_string(word), at);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int at = col;
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        word += text[i++];
        ++col;
      }
      TokenKind kind = is_keyword(word)     ? TokenKind::Keyword
                       : is_face_name(word) ? TokenKind::FaceName
                       : is_axis_name(word) ? TokenKind::AxisName
                                            : TokenKind::Ident;
      push(kind, std::move(word), 0, at);
      continue;
    }
    throw CircuitError(CircuitErrorKind::Lex, line, col,
                       std::string("illegal character '") + c + "'");
  }
  push(TokenKind::End, "", 0, col);
  return tokens;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Circuit run() {
    Circuit circuit;
    skip_newlines();
    if (at_keyword("mode")) {
      advance();
      const Token& tok = peek();
      if (tok.kind == TokenKind::Keyword && (tok.text == "full" || tok.text == "classical")) {
        circuit.mode = tok.text == "full" ? Mode::Full : Mode::Classical;
        advance();
        end_statement();
      } else {
        fail(tok, "expected 'full' or 'classical' after 'mode'");
      }
    }
    skip_newlines();
    if (peek().kind == TokenKind::End)
      throw CircuitError(CircuitErrorKind::MissingPreparation, peek().line, peek().col,
                         "circuit has no preparation statement");
    if (!at_keyword("prepare") && !at_keyword("mix"))
      throw CircuitError(CircuitErrorKind::MissingPreparation, peek().line, peek().col,
                         "first statement must be 'prepare' or 'mix'");
    circuit.statements.push_back(parse_preparation(circuit.mode));
    end_statement();
    for (;;) {
      skip_newlines();
      if (peek().kind == TokenKind::End) break;
      circuit.statements.push_back(parse_statement(circuit.mode));
      end_statement();
    }
    return circuit;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }

  bool at_keyword(std::string_view word) const {
    return peek().kind == TokenKind::Keyword && peek().text == word;
  }

  [[noreturn]] void fail(const Token& tok, const std::string& message) const {
    std::string shown = tok.kind == TokenKind::End      ? "end of input"
                        : tok.kind == TokenKind::Newline ? "end of line"
                                                         : "'" + tok.text + "'";
    throw CircuitError(CircuitErrorKind::Parse, tok.line, tok.col, message + ", got " + shown);
  }

  void skip_newlines() {
    while (peek().kind == TokenKind::Newline) advance();
  }

  void end_statement() {
    if (peek().kind == TokenKind::End) return;
    if (peek().kind != TokenKind::Newline) fail(peek(), "expected end of statement");
    skip_newlines();
  }

  Face expect_face() {
    if (peek().kind != TokenKind::FaceName) fail(peek(), "expected a face (U,D,L,R,F,B)");
    Face f = face_from_letter(peek().text[0]);
    advance();
    return f;
  }

  Axis expect_axis() {
    if (peek().kind != TokenKind::AxisName) fail(peek(), "expected an axis (x,y,z)");
    Axis a = axis_from_letter(peek().text[0]);
    advance();
    return a;
  }

  void check_classical_face(Mode mode, Face f, const Token& tok) {
    if (mode == Mode::Classical && axis_of(f) != Axis::Z)
      throw CircuitError(CircuitErrorKind::ClassicalModeViolation, tok.line, tok.col,
                         "classical mode allows only U/D preparations");
  }

  Stmt parse_preparation(Mode mode) {
    if (at_keyword("prepare")) {
      advance();
      const Token& tok = peek();
      Face f = expect_face();
      check_classical_face(mode, f, tok);
      return PrepareStmt{f};
    }
    const Token& mix_tok = peek();
    advance();  // "mix"
    MixStmt stmt;
    for (;;) {
      const Token& face_tok = peek();
      Face f = expect_face();
      check_classical_face(mode, f, face_tok);
      if (peek().kind != TokenKind::Colon) fail(peek(), "expected ':' after face");
      advance();
      if (peek().kind != TokenKind::Number) fail(peek(), "expected a weight");
      Rat w = peek().value;
      advance();
      stmt.weights.emplace_back(f, w);
      if (peek().kind != TokenKind::Comma) break;
      advance();
    }
    Rat total = 0;
    for (const auto& [face, w] : stmt.weights) {
      if (w < 0)
        throw CircuitError(CircuitErrorKind::WeightsNotNormalized, mix_tok.line, mix_tok.col,
                           "mix weights must be nonnegative");
      total += w;
    }
    if (total != 1)
      throw CircuitError(CircuitErrorKind::WeightsNotNormalized, mix_tok.line, mix_tok.col,
                         "mix weights sum to " + to_string(total) + ", expected 1");
    return stmt;
  }

  Stmt parse_statement(Mode mode) {
    if (at_keyword("prepare") || at_keyword("mix"))
      fail(peek(), "preparation must be the first statement");
    if (at_keyword("rot")) {
      const Token& rot_tok = peek();
      if (mode == Mode::Classical)
        throw CircuitError(CircuitErrorKind::ClassicalModeViolation, rot_tok.line, rot_tok.col,
                           "classical mode has no rotations");
      advance();
      Axis axis = expect_axis();
      const Token& angle_tok = peek();
      if (angle_tok.kind != TokenKind::Number) fail(angle_tok, "expected an angle");
      const Rat& angle = angle_tok.value;
      if (denominator(angle) != 1 || numerator(angle) % 90 != 0 || angle == 0 ||
          abs(angle) > 270)
        throw CircuitError(CircuitErrorKind::AngleNotQuarterTurn, angle_tok.line, angle_tok.col,
                           "angle must be one of +-90, +-180, +-270");
      advance();
      return RotStmt{axis, static_cast<int>(numerator(angle) / 90)};
    }
    if (at_keyword("measure")) {
      const Token& measure_tok = peek();
      advance();
      Axis axis = expect_axis();
      if (mode == Mode::Classical && axis != Axis::Z)
        throw CircuitError(CircuitErrorKind::ClassicalModeViolation, measure_tok.line,
                           measure_tok.col, "classical mode allows only z measurements");
      MeasureStmt stmt{axis, std::nullopt};
      if (at_keyword("as")) {
        advance();
        if (peek().kind != TokenKind::Ident) fail(peek(), "expected a tag identifier after 'as'");
        stmt.tag = peek().text;
        advance();
      }
      return stmt;
    }
    fail(peek(), "expected a statement (rot or measure)");
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Circuit parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

Circuit parse_text(std::string_view text) { return parse(tokenize(text)); }

std::string pretty_print(const Circuit& c) {
  std::string out = c.mode == Mode::Full ? "mode full\n" : "mode classical\n";
  for (const Stmt& stmt : c.statements) {
    if (const auto* prep = std::get_if<PrepareStmt>(&stmt)) {
      out += std::string("prepare ") + face_letter(prep->face);
    } else if (const auto* mix = std::get_if<MixStmt>(&stmt)) {
      out += "mix ";
      for (std::size_t k = 0; k < mix->weights.size(); ++k) {
        if (k) out += ", ";
        out += face_letter(mix->weights[k].first);
        out += ':';
        out += to_string(mix->weights[k].second);
      }
    } else if (const auto* rot = std::get_if<RotStmt>(&stmt)) {
      out += std::string("rot ") + axis_letter(rot->axis) + ' ' +
             std::to_string(rot->quarter_turns * 90);
    } else if (const auto* meas = std::get_if<MeasureStmt>(&stmt)) {
      out += std::string("measure ") + axis_letter(meas->axis);
      if (meas->tag) out += " as " + *meas->tag;
    }
    out += '\n';
  }
  return out;
}

Rotation rotation_of(const RotStmt& stmt) {
  const Rotation gen = rotation_generator(stmt.axis);
  Rotation r = identity_rotation();
  int turns = ((stmt.quarter_turns % 4) + 4) % 4;
  for (int k = 0; k < turns; ++k) r = compose(gen, r);
  return r;
}

namespace {

ProbVec8 initial_state(const Circuit& c) {
  const Stmt& first = c.statements.at(0);
  if (const auto* prep = std::get_if<PrepareStmt>(&first)) return face_state(prep->face);
  const auto& mix = std::get<MixStmt>(first);
  Vec8 out{};
  for (const auto& [face, w] : mix.weights) {
    const ProbVec8 fs = face_state(face);
    for (std::size_t i = 0; i < 8; ++i) out[i] += w * fs[i];
  }
  return ProbVec8(out);
}

}  // namespace

std::vector<BranchOutcome> eval_exact(const Circuit& c) {
  struct Pending {
    std::vector<OutcomeRecord> outcomes;
    Rat probability;
    ProbVec8 state;
  };
  std::vector<Pending> branches;
  branches.push_back(Pending{{}, Rat(1), initial_state(c)});
  for (std::size_t s = 1; s < c.statements.size(); ++s) {
    const Stmt& stmt = c.statements[s];
    if (const auto* rot = std::get_if<RotStmt>(&stmt)) {
      const Rotation r = rotation_of(*rot);
      for (auto& br : branches) br.state = transform(r, br.state);
    } else if (const auto* meas = std::get_if<MeasureStmt>(&stmt)) {
      const Measurement m{meas->axis};
      std::vector<Pending> next;
      for (auto& br : branches) {
        for (const auto& [face, prob] : outcome_distribution(m, br.state)) {
          if (prob == 0) continue;
          Pending child{br.outcomes, br.probability * prob, conditional_update(m, face)};
          child.outcomes.push_back(OutcomeRecord{meas->axis, meas->tag, face});
          next.push_back(std::move(child));
        }
      }
      branches = std::move(next);
    }
  }
  std::vector<BranchOutcome> out;
  out.reserve(branches.size());
  for (auto& br : branches)
    out.push_back(BranchOutcome{std::move(br.outcomes), std::move(br.probability),
                                EpistemicState(std::move(br.state))});
  return out;
}

SampleResult sample(const Circuit& c, std::uint64_t shots, std::uint64_t seed, int threads) {
  // Precompile: cumulative initial distribution plus a flat op list.
  const ProbVec8 p0 = initial_state(c);
  std::array<Rat, 8> cumulative;
  Rat acc = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    acc += p0[i];
    cumulative[i] = acc;
  }
  struct Op {
    bool is_measurement;
    Perm8 perm;
    Measurement m;
  };
  std::vector<Op> ops;
  for (std::size_t s = 1; s < c.statements.size(); ++s) {
    if (const auto* rot = std::get_if<RotStmt>(&c.statements[s]))
      ops.push_back(Op{false, rotation_of(*rot).perm, Measurement{Axis::Z}});
    else if (const auto* meas = std::get_if<MeasureStmt>(&c.statements[s]))
      ops.push_back(Op{true, identity_perm(), Measurement{meas->axis}});
  }

  auto run_shot = [&](std::uint64_t shot) {
    CounterRng rng(seed, shot);
    Rat u = rng.unit_rational();
    int vertex = 8;
    for (int i = 0; i < 8; ++i)
      if (u < cumulative[i]) {
        vertex = i + 1;
        break;
      }
    std::string key;
    OnticState w{vertex};
    for (const Op& op : ops) {
      if (op.is_measurement) {
        auto [outcome, next] = ontic_measure(op.m, w, rng);
        w = next;
        if (!key.empty()) key += ',';
        key += face_letter(outcome);
      } else {
        w = OnticState{op.perm(w.index)};
      }
    }
    return key;
  };

  SampleResult result{shots, seed, {}};
  if (threads < 1) threads = 1;
  if (threads == 1) {
    for (std::uint64_t s = 0; s < shots; ++s) ++result.counts[run_shot(s)];
    return result;
  }
  std::vector<std::map<std::string, std::uint64_t>> partial(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (shots + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
      const std::uint64_t hi = std::min(shots, lo + chunk);
      for (std::uint64_t s = lo; s < hi; ++s) ++partial[t][run_shot(s)];
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& m : partial)
    for (const auto& [key, n] : m) result.counts[key] += n;
  return result;
}

}  // namespace qcube
