#ifndef RICCISOL_RATIONAL_HPP
#define RICCISOL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace riccisol {

/// Arbitrary-precision exact rational scalar.
///
/// Backed by boost::multiprecision::cpp_rational, which keeps values in
/// lowest terms with a positive denominator. All arithmetic is exact;
/// nothing in this library ever rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses the "p" / "p/q" / "-p/q" literal grammar used everywhere a
/// rational enters the tool (CLI flags, spec files, fixtures).
/// Throws parse_error on anything else (q must be a positive integer).
Rational parse_rational(const std::string& text);

/// Renders a rational in the same grammar: "p" when integral, else "p/q".
std::string to_string(const Rational& q);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace riccisol

#endif
