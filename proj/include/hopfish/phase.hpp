#pragma once

// Exact scalars: finite sums of Gaussian-rational multiples of unit phases
// e^{i phi}, where phi = 2*pi*tau + lambda*lam + sum_k c_k alpha_k with
// rational coefficients. lambda/2pi and the alpha_k are treated as generic
// (independent over Q modulo 2*pi*Z).

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopfish/number_theory.hpp"

namespace hopfish {

/// Symbol ids for the formal alpha parameters start at 1 (A1, A2, ...).
using SymbolId = int;

class PhaseExponent {
 public:
  PhaseExponent() = default;
  PhaseExponent(Rational tau, Rational lam, std::vector<std::pair<SymbolId, Rational>> alphas = {});

  static PhaseExponent turns(Rational t) { return {t, Rational(0)}; }
  static PhaseExponent lambda(Rational c) { return {Rational(0), c}; }
  static PhaseExponent alpha(SymbolId id, Rational c = Rational(1));

  /// Coefficient of 2*pi.
  const Rational& tau() const { return tau_; }
  /// Coefficient of lambda.
  const Rational& lam() const { return lam_; }
  /// Sorted by symbol id, no zero coefficients.
  const std::vector<std::pair<SymbolId, Rational>>& alphas() const { return alphas_; }
  Rational alpha_coeff(SymbolId id) const;

  /// Representative with tau in [0, 1).
  PhaseExponent canonical() const;
  bool is_canonical() const;

  bool is_zero() const { return tau_ == 0 && lam_ == 0 && alphas_.empty(); }
  bool has_alphas() const { return !alphas_.empty(); }

  PhaseExponent with_tau(Rational tau) const;
  PhaseExponent with_lam(Rational lam) const;

  PhaseExponent operator-() const;
  PhaseExponent& operator+=(const PhaseExponent& o);
  PhaseExponent& operator-=(const PhaseExponent& o);
  PhaseExponent& operator*=(const Rational& c);
  PhaseExponent& operator/=(const Rational& c);

  friend PhaseExponent operator+(PhaseExponent a, const PhaseExponent& b) { return a += b; }
  friend PhaseExponent operator-(PhaseExponent a, const PhaseExponent& b) { return a -= b; }
  friend PhaseExponent operator*(PhaseExponent a, const Rational& c) { return a *= c; }
  friend PhaseExponent operator*(const Rational& c, PhaseExponent a) { return a *= c; }
  friend PhaseExponent operator/(PhaseExponent a, const Rational& c) { return a /= c; }

  friend bool operator==(const PhaseExponent& a, const PhaseExponent& b);
  friend bool operator!=(const PhaseExponent& a, const PhaseExponent& b) { return !(a == b); }
  /// Strict total order over the raw fields (tau, lam, alphas).
  friend bool operator<(const PhaseExponent& a, const PhaseExponent& b);

  /// Same value of e^{i phi} modulo the lattice Z*lambda + Z*2pi.
  bool congruent_mod_lattice(const PhaseExponent& o) const;

 private:
  Rational tau_{0};
  Rational lam_{0};
  std::vector<std::pair<SymbolId, Rational>> alphas_;
};

PhaseExponent exp_canonicalize(const PhaseExponent& e);

struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r, Rational i = Rational(0)) : re(r), im(i) {}
  Gaussian(Int r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  Gaussian inverse() const;

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

/// Numeric binding of the symbols for floating-point cross-checks.
struct Assignment {
  std::optional<double> lambda;
  std::map<SymbolId, double> alphas;

  /// lambda = 2*pi*(sqrt(5)-1)/2, no alpha symbols bound.
  static Assignment golden();
};

class SymScalar {
 public:
  using Terms = std::map<PhaseExponent, Gaussian>;

  SymScalar() = default;
  SymScalar(Gaussian c);
  SymScalar(Int c) : SymScalar(Gaussian(c)) {}
  SymScalar(Gaussian c, const PhaseExponent& e);

  static SymScalar zero() { return {}; }
  static SymScalar one() { return SymScalar(Gaussian(1)); }
  /// e^{i e}
  static SymScalar phase(const PhaseExponent& e) { return SymScalar(Gaussian(1), e); }
  static SymScalar i() { return SymScalar(Gaussian(Rational(0), Rational(1))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Single term with coefficient 1 (units are folded into the phase).
  bool is_unit_phase() const;
  /// Exponent of a unit phase; nullopt otherwise.
  std::optional<PhaseExponent> as_phase() const;

  SymScalar conj() const;
  SymScalar inverse() const;

  SymScalar& operator+=(const SymScalar& o);
  SymScalar& operator-=(const SymScalar& o);
  SymScalar& operator*=(const SymScalar& o);

  friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a -= b; }
  friend SymScalar operator-(const SymScalar& a);
  friend SymScalar operator*(const SymScalar& a, const SymScalar& b);

  /// Exact equality: the difference reduces to zero, including cancellation
  /// among roots of unity (e.g. 1 + e^{i pi} == 0).
  friend bool operator==(const SymScalar& a, const SymScalar& b);
  friend bool operator!=(const SymScalar& a, const SymScalar& b) { return !(a == b); }

  std::complex<double> eval(const Assignment& assign) const;

 private:
  void normalize();
  Terms terms_;
};

SymScalar scalar_add(const SymScalar& x, const SymScalar& y);
SymScalar scalar_mul(const SymScalar& x, const SymScalar& y);
SymScalar scalar_conj(const SymScalar& x);
SymScalar scalar_inv(const SymScalar& x);
std::complex<double> scalar_eval(const SymScalar& x, const Assignment& assign);

/// Sum of rational multiples of 2*pi-turns sum_k c_k e^{2 pi i t_k} is zero.
bool cyclotomic_sum_is_zero(const std::vector<std::pair<Rational, Gaussian>>& turns_and_coeffs);

}  // namespace hopfish
