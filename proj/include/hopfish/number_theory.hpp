#pragma once

#include <cstdint>

#include <boost/rational.hpp>

// boost::rational's mixed-type operator== recurses forever under C++20
// rewritten comparisons; these exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(std::int64_t b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace hopfish {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// gcd(0, x) = |x|; result is never negative.
Int gcd(Int a, Int b);
/// lcm(0, x) = 0; result is never negative.
Int lcm(Int a, Int b);

struct Bezout {
  Int g;  // gcd(a, b) >= 0
  Int x;  // a*x + b*y == g
  Int y;
};
Bezout bezout(Int a, Int b);

Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

Int floor(const Rational& r);
/// r - floor(r), in [0, 1).
Rational fractional(const Rational& r);
/// r reduced into [0, m) for positive integer m.
Rational reduce_mod(const Rational& r, Int m);

bool is_integer(const Rational& r);

}  // namespace hopfish
