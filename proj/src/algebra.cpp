#include "hopfish/algebra.hpp"

#include <set>

#include "hopfish/error.hpp"

namespace hopfish {

namespace {

SymScalar lam_phase(Rational c) { return SymScalar::phase(PhaseExponent::lambda(c)); }

}  // namespace

AlgebraElement basis(Int n, Int l, const SymScalar& c) { return AlgebraElement::basis({n, l}, c); }

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms())
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb * lam_phase(Rational(ka.first * kb.second)));
  return r;
}

AlgebraElement power(const AlgebraElement& a, Int d) {
  if (d < 0) return power(invert(a), -d);
  AlgebraElement r = unit();
  for (Int i = 0; i < d; ++i) r = mul(r, a);
  return r;
}

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement r;
  for (auto& [k, c] : a.terms())
    r.add_term({-k.first, -k.second}, c.conj() * lam_phase(Rational(k.first * k.second)));
  return r;
}

std::pair<Degree, Degree> degree_extrema(const AlgebraElement& a) {
  if (a.is_zero()) return {std::nullopt, std::nullopt};
  return {a.terms().rbegin()->first, a.terms().begin()->first};
}

AlgebraElement invert(const AlgebraElement& a) {
  if (a.size() != 1 || !a.terms().begin()->second.is_monomial())
    throw Error(ErrorKind::NotInvertible, "only scalar multiples of basis elements are invertible");
  auto& [k, c] = *a.terms().begin();
  // (mu a_{pq})^{-1} = mu^{-1} e^{i lambda pq} a_{-p,-q}
  return basis(-k.first, -k.second, c.inverse() * lam_phase(Rational(k.first * k.second)));
}

UnitaryMonomial as_unitary_monomial(const AlgebraElement& a) {
  if (a.size() != 1 || !a.terms().begin()->second.is_unit_phase())
    throw Error(ErrorKind::NotUnitaryMonomial, "expected a unit phase times a basis element");
  auto& [k, c] = *a.terms().begin();
  return {*c.as_phase(), k.first, k.second};
}

std::optional<AlgebraElement> dth_root(const AlgebraElement& a, Int d) {
  if (d <= 0) throw Error(ErrorKind::InvalidArgument, "root degree must be positive");
  auto m = as_unitary_monomial(a);
  if (m.p % d != 0 || m.q % d != 0) return std::nullopt;
  PhaseExponent e = m.phi / Rational(d) + PhaseExponent::lambda(Rational(-m.p * m.q * (d - 1), 2 * d * d));
  return basis(m.p / d, m.q / d, SymScalar::phase(e));
}

Int root_order(const AlgebraElement& a) {
  auto m = as_unitary_monomial(a);
  if (m.p == 0 && m.q == 0) throw Error(ErrorKind::ZeroIndex, "a_{00} has roots of every order");
  return gcd(m.p, m.q);
}

std::complex<double> eval_function(const AlgebraElement& a, double theta, Int k, const Assignment& assign) {
  std::complex<double> s(0, 0);
  for (auto& [key, c] : a.terms())
    if (key.second == k) s += c.eval(assign) * std::polar(1.0, static_cast<double>(key.first) * theta);
  return s;
}

std::complex<double> convolve_numeric(const AlgebraElement& a, const AlgebraElement& b, double theta, Int k,
                                      const Assignment& assign) {
  if (!assign.lambda) throw Error(ErrorKind::MissingSymbol, "no value bound for L");
  std::set<Int> ks;
  for (auto& [key, c] : b.terms()) ks.insert(key.second);
  std::complex<double> s(0, 0);
  for (Int kp : ks)
    s += eval_function(a, theta + *assign.lambda * static_cast<double>(kp), k - kp, assign) *
         eval_function(b, theta, kp, assign);
  return s;
}

}  // namespace hopfish
