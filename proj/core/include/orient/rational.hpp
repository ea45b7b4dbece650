#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under
// C++20's reversed-candidate rules; exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a == rational<std::int64_t>(b);
}
}  // namespace boost

namespace orient {

using Rational = boost::rational<std::int64_t>;

// d/2 without rounding.
inline Rational half(std::int64_t value) { return Rational(value, 2); }

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace orient
