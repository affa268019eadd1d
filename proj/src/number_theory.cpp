#include "hopfish/number_theory.hpp"

#include <cstdlib>

namespace hopfish {

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int l = (a / gcd(a, b)) * b;
  return l < 0 ? -l : l;
}

Bezout bezout(Int a, Int b) {
  // Extended Euclid on |a|, |b|, signs fixed afterwards.
  Int old_r = a < 0 ? -a : a, r = b < 0 ? -b : b;
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  Bezout out{old_r, a < 0 ? -old_s : old_s, b < 0 ? -old_t : old_t};
  return out;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

Int floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

Rational fractional(const Rational& r) { return r - Rational(floor(r)); }

Rational reduce_mod(const Rational& r, Int m) {
  Rational scaled = r / Rational(m);
  return fractional(scaled) * Rational(m);
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace hopfish
