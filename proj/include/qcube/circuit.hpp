#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcube/epistemic.hpp"

namespace qcube {

enum class CircuitErrorKind {
  Lex,
  Parse,
  WeightsNotNormalized,
  AngleNotQuarterTurn,
  ClassicalModeViolation,
  MissingPreparation,
};

class CircuitError : public std::runtime_error {
 public:
  CircuitError(CircuitErrorKind kind, int line, int col, const std::string& message);

  CircuitErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  CircuitErrorKind kind_;
  int line_;
  int col_;
};

enum class TokenKind { Keyword, FaceName, AxisName, Ident, Number, Comma, Colon, Newline, End };

struct Token {
  TokenKind kind;
  std::string text;
  Rat value;  // Number tokens only
  int line;
  int col;
};

// Keywords, face/axis names, identifiers, rationals, separators; '#' starts
// a comment to end of line; ';' separates like a newline.
std::vector<Token> tokenize(std::string_view text);

enum class Mode { Full, Classical };

struct PrepareStmt {
  Face face;
  friend bool operator==(const PrepareStmt&, const PrepareStmt&) = default;
};

struct MixStmt {
  std::vector<std::pair<Face, Rat>> weights;
  friend bool operator==(const MixStmt&, const MixStmt&) = default;
};

struct RotStmt {
  Axis axis;
  int quarter_turns;  // angle/90, one of +-1, +-2, +-3
  friend bool operator==(const RotStmt&, const RotStmt&) = default;
};

struct MeasureStmt {
  Axis axis;
  std::optional<std::string> tag;
  friend bool operator==(const MeasureStmt&, const MeasureStmt&) = default;
};

using Stmt = std::variant<PrepareStmt, MixStmt, RotStmt, MeasureStmt>;

struct Circuit {
  Mode mode = Mode::Full;
  std::vector<Stmt> statements;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

Circuit parse(const std::vector<Token>& tokens);
Circuit parse_text(std::string_view text);

// Canonical source form; parses back to an identical circuit.
std::string pretty_print(const Circuit& c);

// The rotation a rot statement compiles to (repeated generator application).
Rotation rotation_of(const RotStmt& stmt);

struct OutcomeRecord {
  Axis axis;
  std::optional<std::string> tag;
  Face face;
  friend bool operator==(const OutcomeRecord&, const OutcomeRecord&) = default;
};

struct BranchOutcome {
  std::vector<OutcomeRecord> outcomes;
  Rat probability;
  EpistemicState final_state;
};

// Depth-first branch expansion; measurements split branches, zero-probability
// branches are pruned, probabilities sum to exactly 1.
std::vector<BranchOutcome> eval_exact(const Circuit& c);

struct SampleResult {
  std::uint64_t shots;
  std::uint64_t seed;
  // Keyed by the comma-joined outcome faces, e.g. "F,U".
  std::map<std::string, std::uint64_t> counts;
};

// Ontic-level Monte Carlo with per-shot counter RNG streams; the result is a
// pure function of (circuit, shots, seed), whatever the worker count.
SampleResult sample(const Circuit& c, std::uint64_t shots, std::uint64_t seed, int threads = 1);

}  // namespace qcube
