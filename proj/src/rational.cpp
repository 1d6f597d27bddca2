#include "qcube/rational.hpp"

#include <stdexcept>

namespace qcube {

std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace {

BigInt int_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign in integer literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(s));
  }
  return BigInt(std::string(s));
}

}  // namespace

Rat rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(int_from_string(s));
  BigInt num = int_from_string(s.substr(0, slash));
  BigInt den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return Rat(num, den);
}

}  // namespace qcube
