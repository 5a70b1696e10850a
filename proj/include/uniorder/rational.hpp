#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace uniorder {

// Exact rational arithmetic. All geometric code in this library is exact;
// nothing here ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  return Rat(num, den);
}

// Canonical "p/q" form, q > 0, reduced. Integers still carry "/1" so that
// serialized values have a single shape.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  s += '/';
  s += denominator(r).str();
  return s;
}

inline Rat rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + std::string(s) + "'");
  }
}

}  // namespace uniorder
