#include "hopfish/phase.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "hopfish/error.hpp"

namespace hopfish {

namespace {

using AlphaVec = std::vector<std::pair<SymbolId, Rational>>;

AlphaVec clean(AlphaVec v) {
  std::map<SymbolId, Rational> m;
  for (auto& [id, c] : v) m[id] += c;
  AlphaVec out;
  for (auto& [id, c] : m)
    if (c != 0) out.emplace_back(id, c);
  return out;
}

AlphaVec combine(const AlphaVec& a, const AlphaVec& b, int sign) {
  AlphaVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * Rational(sign));
      ++j;
    } else {
      Rational c = a[i].second + b[j].second * Rational(sign);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

PhaseExponent::PhaseExponent(Rational tau, Rational lam, AlphaVec alphas)
    : tau_(tau), lam_(lam), alphas_(clean(std::move(alphas))) {}

PhaseExponent PhaseExponent::alpha(SymbolId id, Rational c) { return {Rational(0), Rational(0), {{id, c}}}; }

Rational PhaseExponent::alpha_coeff(SymbolId id) const {
  for (auto& [k, c] : alphas_)
    if (k == id) return c;
  return Rational(0);
}

PhaseExponent PhaseExponent::canonical() const {
  PhaseExponent r = *this;
  r.tau_ = fractional(tau_);
  return r;
}

bool PhaseExponent::is_canonical() const { return tau_ >= 0 && tau_ < 1; }

PhaseExponent PhaseExponent::with_tau(Rational tau) const {
  PhaseExponent r = *this;
  r.tau_ = tau;
  return r;
}

PhaseExponent PhaseExponent::with_lam(Rational lam) const {
  PhaseExponent r = *this;
  r.lam_ = lam;
  return r;
}

PhaseExponent PhaseExponent::operator-() const {
  PhaseExponent r = *this;
  r.tau_ = -tau_;
  r.lam_ = -lam_;
  for (auto& kv : r.alphas_) kv.second = -kv.second;
  return r;
}

PhaseExponent& PhaseExponent::operator+=(const PhaseExponent& o) {
  tau_ += o.tau_;
  lam_ += o.lam_;
  alphas_ = combine(alphas_, o.alphas_, 1);
  return *this;
}

PhaseExponent& PhaseExponent::operator-=(const PhaseExponent& o) {
  tau_ -= o.tau_;
  lam_ -= o.lam_;
  alphas_ = combine(alphas_, o.alphas_, -1);
  return *this;
}

PhaseExponent& PhaseExponent::operator*=(const Rational& c) {
  tau_ *= c;
  lam_ *= c;
  if (c == 0) {
    alphas_.clear();
  } else {
    for (auto& kv : alphas_) kv.second *= c;
  }
  return *this;
}

PhaseExponent& PhaseExponent::operator/=(const Rational& c) {
  if (c == 0) throw Error(ErrorKind::InvalidArgument, "phase exponent divided by zero");
  return *this *= (Rational(1) / c);
}

bool operator==(const PhaseExponent& a, const PhaseExponent& b) {
  return a.tau_ == b.tau_ && a.lam_ == b.lam_ && a.alphas_ == b.alphas_;
}

bool operator<(const PhaseExponent& a, const PhaseExponent& b) {
  if (a.tau_ != b.tau_) return a.tau_ < b.tau_;
  if (a.lam_ != b.lam_) return a.lam_ < b.lam_;
  return a.alphas_ < b.alphas_;
}

bool PhaseExponent::congruent_mod_lattice(const PhaseExponent& o) const {
  PhaseExponent d = *this - o;
  return d.alphas_.empty() && is_integer(d.tau_) && is_integer(d.lam_);
}

PhaseExponent exp_canonicalize(const PhaseExponent& e) { return e.canonical(); }

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (n == 0) throw Error(ErrorKind::ZeroScalar, "inverse of zero coefficient");
  return {re / n, -im / n};
}

Assignment Assignment::golden() {
  Assignment a;
  a.lambda = 2 * std::numbers::pi * (std::sqrt(5.0) - 1) / 2;
  return a;
}

// ---- cyclotomic zero test ----

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^k at index k

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    Rational lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
    trim(a);
  }
  return a;
}

// Exact quotient a / b with b monic.
Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  Poly q(a.size() - db, Rational(0));
  while (a.size() > db) {
    Rational lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
    trim(a);
  }
  return q;
}

const Poly& cyclotomic(Int m) {
  static std::mutex mu;
  static std::map<Int, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(m) + 1, Rational(0));
  p[0] = Rational(-1);
  p[static_cast<std::size_t>(m)] = Rational(1);
  for (Int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_div(p, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

bool cyclotomic_sum_is_zero(const std::vector<std::pair<Rational, Gaussian>>& terms) {
  Int m = 4;
  for (auto& [t, c] : terms) m = lcm(m, t.denominator());
  Poly p(static_cast<std::size_t>(m), Rational(0));
  for (auto& [t, c] : terms) {
    Int e = floor_mod(floor(fractional(t) * m), m);
    p[static_cast<std::size_t>(e)] += c.re;
    p[static_cast<std::size_t>((e + m / 4) % m)] += c.im;
  }
  return poly_mod(p, cyclotomic(m)).empty();
}

// ---- SymScalar ----

SymScalar::SymScalar(Gaussian c) {
  if (!c.is_zero()) terms_.emplace(PhaseExponent{}, c);
  normalize();
}

SymScalar::SymScalar(Gaussian c, const PhaseExponent& e) {
  if (!c.is_zero()) terms_.emplace(e.canonical(), c);
  normalize();
}

void SymScalar::normalize() {
  // Fold real and imaginary units of the coefficient into the exponent, merge.
  bool changed = true;
  while (changed) {
    changed = false;
    Terms next;
    for (auto& [e, c] : terms_) {
      if (c.is_zero()) {
        changed = true;
        continue;
      }
      Rational shift(0);
      Gaussian cc = c;
      if (c.im == 0 && c.re < 0) {
        shift = Rational(1, 2);
        cc = {-c.re, Rational(0)};
      } else if (c.re == 0 && c.im > 0) {
        shift = Rational(1, 4);
        cc = {c.im, Rational(0)};
      } else if (c.re == 0 && c.im < 0) {
        shift = Rational(3, 4);
        cc = {-c.im, Rational(0)};
      }
      PhaseExponent ne = shift == 0 ? e : (e + PhaseExponent::turns(shift)).canonical();
      if (shift != 0) changed = true;
      auto [it, fresh] = next.emplace(ne, cc);
      if (!fresh) {
        it->second = it->second + cc;
        changed = true;
      }
    }
    terms_ = std::move(next);
  }
  // Drop groups (same lambda and alpha part) that vanish as sums of roots of unity.
  std::map<PhaseExponent, std::vector<Terms::const_iterator>> groups;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) groups[it->first.with_tau(Rational(0))].push_back(it);
  std::vector<PhaseExponent> doomed;
  for (auto& [key, its] : groups) {
    if (its.size() < 2) continue;
    std::vector<std::pair<Rational, Gaussian>> ts;
    for (auto it : its) ts.emplace_back(it->first.tau(), it->second);
    if (cyclotomic_sum_is_zero(ts))
      for (auto it : its) doomed.push_back(it->first);
  }
  for (auto& e : doomed) terms_.erase(e);
}

bool SymScalar::is_unit_phase() const { return terms_.size() == 1 && terms_.begin()->second == Gaussian(1); }

std::optional<PhaseExponent> SymScalar::as_phase() const {
  if (!is_unit_phase()) return std::nullopt;
  return terms_.begin()->first;
}

SymScalar SymScalar::conj() const {
  SymScalar r;
  for (auto& [e, c] : terms_) r.terms_.emplace((-e).canonical(), c.conj());
  r.normalize();
  return r;
}

SymScalar SymScalar::inverse() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroScalar, "inverse of zero scalar");
  if (terms_.size() != 1) throw Error(ErrorKind::NonMonomial, "inverse of a scalar with several terms");
  auto& [e, c] = *terms_.begin();
  return SymScalar(c.inverse(), -e);
}

SymScalar& SymScalar::operator+=(const SymScalar& o) {
  for (auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) it->second = it->second + c;
  }
  normalize();
  return *this;
}

SymScalar operator-(const SymScalar& a) {
  SymScalar r;
  for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  r.normalize();
  return r;
}

SymScalar& SymScalar::operator-=(const SymScalar& o) { return *this += -o; }

SymScalar operator*(const SymScalar& a, const SymScalar& b) {
  SymScalar r;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      PhaseExponent e = (ea + eb).canonical();
      Gaussian c = ca * cb;
      auto [it, fresh] = r.terms_.emplace(e, c);
      if (!fresh) it->second = it->second + c;
    }
  r.normalize();
  return r;
}

SymScalar& SymScalar::operator*=(const SymScalar& o) { return *this = *this * o; }

bool operator==(const SymScalar& a, const SymScalar& b) {
  if (a.terms_ == b.terms_) return true;
  return (a - b).is_zero();
}

std::complex<double> SymScalar::eval(const Assignment& assign) const {
  std::complex<double> sum(0, 0);
  for (auto& [e, c] : terms_) {
    double phi = 2 * std::numbers::pi * boost::rational_cast<double>(e.tau());
    if (e.lam() != 0) {
      if (!assign.lambda) throw Error(ErrorKind::MissingSymbol, "no value bound for L");
      phi += *assign.lambda * boost::rational_cast<double>(e.lam());
    }
    for (auto& [id, k] : e.alphas()) {
      auto it = assign.alphas.find(id);
      if (it == assign.alphas.end()) throw Error(ErrorKind::MissingSymbol, "no value bound for A" + std::to_string(id));
      phi += it->second * boost::rational_cast<double>(k);
    }
    std::complex<double> cc(boost::rational_cast<double>(c.re), boost::rational_cast<double>(c.im));
    sum += cc * std::polar(1.0, phi);
  }
  return sum;
}

SymScalar scalar_add(const SymScalar& x, const SymScalar& y) { return x + y; }
SymScalar scalar_mul(const SymScalar& x, const SymScalar& y) { return x * y; }
SymScalar scalar_conj(const SymScalar& x) { return x.conj(); }
SymScalar scalar_inv(const SymScalar& x) { return x.inverse(); }
std::complex<double> scalar_eval(const SymScalar& x, const Assignment& assign) { return x.eval(assign); }

}  // namespace hopfish
