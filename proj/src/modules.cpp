#include "hopfish/modules.hpp"

#include <map>
#include <tuple>

#include "hopfish/error.hpp"

namespace hopfish {

namespace {

SymScalar ph(const PhaseExponent& e) { return SymScalar::phase(e); }
PhaseExponent lam(Rational c) { return PhaseExponent::lambda(c); }

// xi_n . a10 = f(n) xi_{n+q} when p != 0
PhaseExponent a10_phase(const ModuleClass& c, Int n) {
  return (c.alpha + lam(Rational(n) + Rational(c.q * (c.p + 1), 2))) / Rational(c.p);
}

// xi_n . a01 = g(n) xi_n when p == 0
PhaseExponent a01_phase(const ModuleClass& c, Int n) { return (c.alpha + lam(Rational(n))) / Rational(c.q); }

}  // namespace

std::pair<Int, PhaseExponent> module_step(const ModuleClass& c, Int n, int gen, int dir) {
  if (c.p != 0) {
    if (gen == 0) {
      if (dir > 0) return {n + c.q, a10_phase(c, n)};
      return {n - c.q, -a10_phase(c, n - c.q)};
    }
    return {dir > 0 ? n - c.p : n + c.p, PhaseExponent{}};
  }
  if (gen == 0) return {dir > 0 ? n + c.q : n - c.q, PhaseExponent{}};
  return {n, dir > 0 ? a01_phase(c, n) : -a01_phase(c, n)};
}

ModuleClass::ModuleClass(PhaseExponent a, Int p_, Int q_) : alpha(std::move(a)), p(p_), q(q_) {
  if (p == 0 && q == 0) throw Error(ErrorKind::ZeroIndex, "T^alpha_{pq} needs (p,q) != (0,0)");
}

ModuleClass ModuleClass::canonical() const {
  ModuleClass c = *this;
  if (c.p < 0 || (c.p == 0 && c.q < 0)) {
    c.p = -c.p;
    c.q = -c.q;
    c.alpha = -c.alpha;
  }
  Int dd = c.d();
  c.alpha = c.alpha.with_lam(fractional(c.alpha.lam())).with_tau(reduce_mod(c.alpha.tau(), dd));
  return c;
}

bool operator<(const ModuleClass& a, const ModuleClass& b) {
  return std::tie(a.p, a.q, a.alpha) < std::tie(b.p, b.q, b.alpha);
}

ModuleVector module_act(const ModuleVector& v, const AlgebraElement& a) {
  const ModuleClass& c = v.cls;
  ModuleVector out{c, {}};
  for (auto& [n0, cv] : v.coords.terms())
    for (auto& [idx, ca] : a.terms()) {
      auto [m, l] = idx;
      // a_{ml} = e^{-i lambda m l} a10^m a01^l
      Int n = n0;
      PhaseExponent e = lam(Rational(-m * l));
      for (Int i = 0; i < (m < 0 ? -m : m); ++i) {
        auto [nn, de] = module_step(c, n, 0, m > 0 ? 1 : -1);
        n = nn;
        e += de;
      }
      for (Int i = 0; i < (l < 0 ? -l : l); ++i) {
        auto [nn, de] = module_step(c, n, 1, l > 0 ? 1 : -1);
        n = nn;
        e += de;
      }
      out.coords.add_term(n, cv * ca * ph(e));
    }
  return out;
}

SymScalar inner(const ModuleVector& v, const ModuleVector& w) {
  SymScalar s;
  for (auto& [n, c] : v.coords.terms()) s += c.conj() * w.coords.coeff(n);
  return s;
}

AlgebraElement defining_unitary(const ModuleClass& c) { return basis(c.p, c.q, ph(-c.alpha)); }

Int label(const ModuleClass& cls, Int j, Int k) { return j * cls.q - k * cls.p; }

SymScalar rescaling(const ModuleClass& cls, Int j, Int k) {
  const Int p = cls.p, q = cls.q;
  if (p != 0) {
    PhaseExponent e = cls.alpha * Rational(-j) + lam(Rational(j * k * p) - Rational(j * (j + p) * q, 2));
    return ph(e / Rational(p));
  }
  return ph(cls.alpha * Rational(-k, q));
}

ModuleVector quotient_coordinates(const AlgebraElement& a, const ModuleClass& cls) {
  if (!cls.simple()) throw Error(ErrorKind::NotCoprime, "quotient coordinates need coprime (p,q)");
  ModuleVector out{cls, {}};
  for (auto& [idx, c] : a.terms()) {
    auto [j, k] = idx;
    out.coords.add_term(label(cls, j, k), c * rescaling(cls, j, k).inverse());
  }
  return out;
}

bool is_simple(const ModuleClass& c) { return c.simple(); }

std::vector<ModuleClass> decompose(const ModuleClass& c) {
  Int dd = c.d();
  std::vector<ModuleClass> out;
  for (Int l = 0; l < dd; ++l)
    out.push_back(ModuleClass((c.alpha + lam(Rational(l))) / Rational(dd), c.p / dd, c.q / dd).canonical());
  return out;
}

bool is_isomorphic(const ModuleClass& a, const ModuleClass& b) {
  if (!a.simple() || !b.simple()) throw Error(ErrorKind::NotSimple, "isomorphism test needs simple classes");
  return a.canonical() == b.canonical();
}

bool decomposition_spectrum_matches(const ModuleClass& parent, Int window) {
  AlgebraElement u = defining_unitary(parent);
  std::map<Int, int> count;
  // parent spectrum
  for (Int m = -window; m <= window; ++m) {
    auto img = module_act(ModuleVector::xi(parent, m), u);
    if (img != ModuleVector::xi(parent, m, ph(lam(Rational(m))))) return false;
  }
  Int dd = parent.d();
  for (auto& s : decompose(parent)) {
    // eigen-labels N on a range of summand basis vectors wide enough to cover the window
    Int span = window / dd + 2 + (parent.p * parent.q < 0 ? -parent.p * parent.q : parent.p * parent.q);
    for (Int n = -span; n <= span; ++n) {
      auto img = module_act(ModuleVector::xi(s, n), u);
      if (img.coords.size() != 1 || img.coords.terms().begin()->first != n) return false;
      auto phase = img.coords.terms().begin()->second.as_phase();
      if (!phase || phase->has_alphas() || phase->tau() != 0 || !is_integer(phase->lam())) return false;
      Int N = phase->lam().numerator();
      if (N >= -window && N <= window) ++count[N];
    }
  }
  for (Int N = -window; N <= window; ++N)
    if (count[N] != 1) return false;
  return true;
}

}  // namespace hopfish
