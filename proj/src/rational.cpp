#include "riccisol/rational.hpp"

#include <cctype>

namespace riccisol {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> parse_error {
    return parse_error("not a rational literal: '" + text + "' (expected p, -p or p/q)");
  };
  if (text.empty()) throw bad();

  const size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? std::string() : text.substr(slash + 1);

  size_t start = 0;
  if (num[0] == '-') start = 1;
  if (!all_digits(num, start, num.size())) throw bad();
  if (slash != std::string::npos && !all_digits(den, 0, den.size())) throw bad();

  Integer p(num);
  Integer q = slash == std::string::npos ? Integer(1) : Integer(den);
  if (q == 0) throw parse_error("zero denominator in rational literal: '" + text + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace riccisol
