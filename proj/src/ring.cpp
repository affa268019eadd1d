#include "hopfish/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "hopfish/error.hpp"

namespace hopfish {

namespace {

PhaseExponent lam(Rational c) { return PhaseExponent::lambda(c); }
PhaseExponent turns(Rational c) { return PhaseExponent::turns(c); }

bool is_2pi_multiple(const PhaseExponent& e) { return !e.has_alphas() && e.lam() == 0 && is_integer(e.tau()); }

Int iabs(Int x) { return x < 0 ? -x : x; }

}  // namespace

// ---- ClassSum ----

ClassSum ClassSum::of(const ModuleClass& c, Int m) {
  ClassSum s;
  s.add(c, m);
  return s;
}

void ClassSum::add(const ModuleClass& c, Int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "class multiplicities are positive");
  if (m == 0) return;
  for (auto& s : decompose(c)) terms_[s] += m;
}

Int ClassSum::total() const {
  Int t = 0;
  for (auto& [c, m] : terms_) t += m;
  return t;
}

ClassSum& ClassSum::operator+=(const ClassSum& o) {
  for (auto& [c, m] : o.terms_) terms_[c] += m;
  return *this;
}

ClassSum operator*(Int m, const ClassSum& x) {
  ClassSum r;
  if (m <= 0) return r;
  for (auto& [c, k] : x.terms_) r.terms_[c] = k * m;
  return r;
}

// ---- closed forms ----

std::pair<Int, Int> tensor_pq(Int p1, Int q1, Int p2, Int q2) {
  Int g = gcd(p1, p2);
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "tensor_pq needs p1 or p2 nonzero");
  return {p1 / g * p2, (p1 * q2 + p2 * q1) / g};
}

namespace {

// Both p nonzero.
ClassSum tensor_case1(const ModuleClass& c1, const ModuleClass& c2) {
  const Int p1 = c1.p, q1 = c1.q, p2 = c2.p, q2 = c2.q;
  const Int g = gcd(p1, p2);
  const Int a = p1 / g, b = p2 / g;
  auto [p, q] = tensor_pq(p1, q1, p2, q2);
  PhaseExponent alpha =
      (c1.alpha * Rational(p2) + c2.alpha * Rational(p1)) / Rational(g) + lam(Rational(p * (q1 + q2 - q), 2));
  // b x + a y = 1 fixes the offset between the gcd(p1,p2) orbit families
  Bezout bz = bezout(b, a);
  const Int tau = bz.y * q1 - bz.x * q2;
  ClassSum out;
  for (Int j = 0; j < g; ++j) out.add(ModuleClass(alpha + turns(Rational(a * b * tau * j)), p, q));
  return out;
}

// p of c1 nonzero, p of c2 zero.
ClassSum tensor_case2(const ModuleClass& c1, const ModuleClass& c2) {
  return ClassSum::of(ModuleClass(c2.alpha, 0, c2.q), iabs(c1.p));
}

// Both p zero.
ClassSum tensor_case3(const ModuleClass& c1, const ModuleClass& c2) {
  const Int q1 = c1.q, q2 = c2.q;
  const Int g = gcd(q1, q2);
  PhaseExponent x = c1.alpha * Rational(q2) - c2.alpha * Rational(q1);
  ClassSum out;
  if (x.has_alphas() || !is_integer(x.lam() / Rational(g)) || !is_integer(x.tau() / Rational(q1 * q2))) return out;
  const Int r = -(x.lam() / Rational(g)).numerator();
  Bezout bz = bezout(q2, q1);  // q2 s1 - q1 s2 = g
  const Int s1 = bz.x;
  PhaseExponent alpha = (c1.alpha + lam(Rational(r * s1))) * Rational(g, q1);
  out.add(ModuleClass(alpha, 0, g));
  return out;
}

ClassSum tensor_simple(const ModuleClass& c1, const ModuleClass& c2) {
  if (c1.p != 0 && c2.p != 0) return tensor_case1(c1, c2);
  if (c1.p != 0) return tensor_case2(c1, c2);
  if (c2.p != 0) return tensor_case2(c2, c1);
  return tensor_case3(c1, c2);
}

}  // namespace

ClassSum tensor_closed_form(const ModuleClass& c1, const ModuleClass& c2) {
  ClassSum out;
  for (auto& s1 : decompose(c1))
    for (auto& s2 : decompose(c2)) out += tensor_simple(s1, s2);
  return out;
}

ClassSum tensor_theorem_literal(const ModuleClass& c1, const ModuleClass& c2) {
  const Int p1 = c1.p, q1 = c1.q, p2 = c2.p, q2 = c2.q;
  ClassSum out;
  if (p1 != 0 || p2 != 0) {
    const Int g = gcd(p1, p2);
    const Int p = lcm(p1, p2);
    const Int q = (p1 * q2 + p2 * q1) / g;
    PhaseExponent alpha = (c1.alpha * Rational(p2) + c2.alpha * Rational(p1)) / Rational(g);
    if (p == 0 && q == 0) return out;
    out.add(ModuleClass(alpha, p, q), g);
    return out;
  }
  const Int g = gcd(q1, q2);
  PhaseExponent x = c1.alpha * Rational(q2) - c2.alpha * Rational(q1);
  if (x.has_alphas() || !is_integer(x.lam() / Rational(g)) || !is_integer(x.tau() / Rational(lcm(q1, q2) * g)))
    return out;
  Bezout bz = bezout(q2, q1);
  const Int s1 = bz.x, s2 = -bz.y;
  out.add(ModuleClass(c2.alpha * Rational(s1) - c1.alpha * Rational(s2), 0, g));
  return out;
}

ClassSum ring_mul(const ClassSum& x, const ClassSum& y) {
  ClassSum out;
  for (auto& [c1, m1] : x.terms())
    for (auto& [c2, m2] : y.terms()) out += (m1 * m2) * tensor_closed_form(c1, c2);
  return out;
}

// ---- brute-force oracle ----

namespace {

constexpr Int kCounted = 10;  // orbits whose multiplicity is tallied
constexpr Int kInterior = 4;  // orbits whose phases are compared
constexpr Int kMaxR = 8;
constexpr Int kMaxS = 24;
constexpr Int kMaxCycle = 64;

struct Quotient {
  Int W;
  Int side;
  std::vector<Int> parent;
  std::vector<PhaseExponent> rho;  // xi'_x = e^{i rho_x} xi'_{parent(x)}
  std::vector<char> zero;          // valid on roots
  std::vector<Int> anchor;         // valid on roots: member nearest the centre

  explicit Quotient(Int window) : W(window), side(2 * window + 1) {
    const Int n = side * side;
    parent.resize(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    rho.assign(static_cast<std::size_t>(n), PhaseExponent{});
    zero.assign(static_cast<std::size_t>(n), 0);
  }

  bool inside(Int k1, Int k2) const { return iabs(k1) <= W && iabs(k2) <= W; }
  Int id(Int k1, Int k2) const { return (k1 + W) * side + (k2 + W); }
  Int k1_of(Int i) const { return i / side - W; }
  Int k2_of(Int i) const { return i % side - W; }
  Int dist(Int i) const { return std::max(iabs(k1_of(i)), iabs(k2_of(i))); }

  // root, with rho[x] made relative to it
  Int find(Int x) {
    auto ux = static_cast<std::size_t>(x);
    Int p = parent[ux];
    if (p == x) return x;
    Int r = find(p);
    rho[ux] = rho[ux] + rho[static_cast<std::size_t>(p)];
    parent[ux] = r;
    return r;
  }
  PhaseExponent rel(Int x) {
    Int r = find(x);
    return x == r ? PhaseExponent{} : rho[static_cast<std::size_t>(x)];
  }

  // impose xi'_x = e^{i theta} xi'_y
  void relate(Int x, Int y, const PhaseExponent& theta) {
    Int rx = find(x), ry = find(y);
    PhaseExponent t = theta + rel(y) - rel(x);  // xi'_rx = e^{i t} xi'_ry
    if (rx == ry) {
      if (!is_2pi_multiple(t)) zero[static_cast<std::size_t>(rx)] = 1;
      return;
    }
    parent[static_cast<std::size_t>(rx)] = ry;
    rho[static_cast<std::size_t>(rx)] = t.canonical();
    if (zero[static_cast<std::size_t>(rx)]) zero[static_cast<std::size_t>(ry)] = 1;
  }

  void finish() {
    const Int n = side * side;
    anchor.assign(static_cast<std::size_t>(n), -1);
    for (Int i = 0; i < n; ++i) {
      Int r = find(i);
      Int& a = anchor[static_cast<std::size_t>(r)];
      if (a < 0 || dist(i) < dist(a)) a = i;
    }
  }
};

struct Step {
  int gen;
  int dir;
};

// Generator word for a_{rs}, steps interleaved so partial sums track the line.
std::vector<Step> word_for(Int r, Int s) {
  std::vector<Step> w;
  Int ar = iabs(r), as = iabs(s);
  Int i = 0, j = 0;
  while (i < ar || j < as) {
    // advance the generator that lags behind its share of the path
    if (j >= as || (i < ar && (i + 1) * as <= (j + 1) * ar)) {
      w.push_back({0, r > 0 ? 1 : -1});
      ++i;
    } else {
      w.push_back({1, s > 0 ? 1 : -1});
      ++j;
    }
  }
  return w;
}

// Phase omega with (word product) = e^{i omega} a_{rs}.
PhaseExponent word_phase(const std::vector<Step>& w, Int r, Int s) {
  AlgebraElement prod = unit();
  for (auto& st : w) prod = mul(prod, st.gen == 0 ? basis(st.dir, 0) : basis(0, st.dir));
  auto c = prod.coeff({r, s});
  return *c.as_phase();
}

}  // namespace

SpectralFingerprint tensor_oracle(const ModuleClass& c1, const ModuleClass& c2, Int window) {
  const Int need = std::max({iabs(c1.p), iabs(c1.q), iabs(c2.p), iabs(c2.q), Int(4)});
  if (window < need) throw Error(ErrorKind::WindowTooSmall, "oracle window must be at least " + std::to_string(need));
  const Int W = window;
  Quotient Q(W);

  // (xi_k1 . a01) (x) xi_k2 = xi_k1 (x) (xi_k2 . a01) over d_000
  for (Int k1 = -W; k1 <= W; ++k1)
    for (Int k2 = -W; k2 <= W; ++k2) {
      auto [k1p, g1] = module_step(c1, k1, 1, 1);
      auto [k2p, g2] = module_step(c2, k2, 1, 1);
      // e^{i g2} xi'_{k1,k2p} = e^{i g1} xi'_{k1p,k2}
      if (!Q.inside(k1, k2p) || !Q.inside(k1p, k2)) continue;
      Q.relate(Q.id(k1, k2p), Q.id(k1p, k2), g1 - g2);
    }
  Q.finish();

  SpectralFingerprint fp;
  fp.window = W;
  const Int n = Q.side * Q.side;
  bool any_live = false;
  for (Int i = 0; i < n; ++i)
    if (Q.find(i) == i && !Q.zero[static_cast<std::size_t>(i)] && Q.dist(Q.anchor[static_cast<std::size_t>(i)]) <= kCounted)
      any_live = true;
  if (!any_live) return fp;

  // Direction: the smallest primitive (r,s) whose tensor shift moves along the
  // identification vector, so a_{rs} permutes orbits.
  const Int d10_1 = c1.q, d10_2 = c2.q;
  const Int d01_1 = c1.p != 0 ? -c1.p : 0;
  const Int v1 = -c1.p, v2 = c2.p;
  std::optional<Index2> dir;
  for (Int tot = 1; tot <= kMaxR + kMaxS && !dir; ++tot)
    for (Int r = 0; r <= std::min(tot, kMaxR) && !dir; ++r) {
      Int sa = tot - r;
      if (sa > kMaxS) continue;
      for (Int s : {sa, -sa}) {
        if (r == 0 && s <= 0) continue;
        if (sa == 0 && s < 0) continue;
        if (gcd(r, s) != 1) continue;
        Int D1 = r * d10_1 + s * d01_1, D2 = r * d10_2;
        bool ok = (D1 == 0 && D2 == 0) || (D1 * v2 - D2 * v1 == 0 && (v1 != 0 || v2 != 0));
        if (ok) {
          dir = Index2{r, s};
          break;
        }
      }
    }
  if (!dir) throw Error(ErrorKind::WindowTooSmall, "no orbit-preserving direction within the search bounds");
  fp.direction = dir;
  const auto [r, s] = *dir;
  const auto word = word_for(r, s);
  const PhaseExponent omega = word_phase(word, r, s);

  // a_{rs} applied to the anchor of an orbit: (image orbit root, phase), or nullopt at the boundary
  auto apply = [&](Int root) -> std::optional<std::pair<Int, PhaseExponent>> {
    Int node = Q.anchor[static_cast<std::size_t>(root)];
    PhaseExponent ph;
    for (auto& st : word) {
      Int k1 = Q.k1_of(node), k2 = Q.k2_of(node);
      // a10 -> a10 (x) a10, a01 -> a01 (x) 1
      auto [n1, e1] = module_step(c1, k1, st.gen, st.dir);
      Int n2 = k2;
      PhaseExponent e2;
      if (st.gen == 0) std::tie(n2, e2) = module_step(c2, k2, 0, st.dir);
      if (!Q.inside(n1, n2)) return std::nullopt;
      Int y = Q.id(n1, n2);
      Int ry = Q.find(y);
      if (Q.zero[static_cast<std::size_t>(ry)]) return std::nullopt;
      Int m = Q.anchor[static_cast<std::size_t>(ry)];
      ph += e1 + e2 + Q.rel(y) - Q.rel(m);
      node = m;
    }
    return std::make_pair(Q.find(node), (ph - omega).canonical());
  };

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::map<PhaseExponent, Int> counted;
  std::vector<PhaseExponent> interior;
  for (Int i = 0; i < n; ++i) {
    if (Q.find(i) != i || Q.zero[static_cast<std::size_t>(i)] || seen[static_cast<std::size_t>(i)]) continue;
    if (Q.dist(Q.anchor[static_cast<std::size_t>(i)]) > kCounted) continue;
    std::vector<Int> cyc{i};
    PhaseExponent psi;
    bool ok = true;
    Int cur = i;
    while (true) {
      auto img = apply(cur);
      if (!img) {
        ok = false;
        break;
      }
      psi += img->second;
      cur = img->first;
      if (cur == i) break;
      if (static_cast<Int>(cyc.size()) >= kMaxCycle || std::find(cyc.begin(), cyc.end(), cur) != cyc.end()) {
        ok = false;
        break;
      }
      cyc.push_back(cur);
    }
    for (Int c : cyc) seen[static_cast<std::size_t>(c)] = 1;
    if (!ok) continue;
    Int mind = Q.W;
    for (Int c : cyc) mind = std::min(mind, Q.dist(Q.anchor[static_cast<std::size_t>(c)]));
    const Int e = static_cast<Int>(cyc.size());
    for (Int k = 0; k < e; ++k) {
      PhaseExponent phase = ((psi + turns(Rational(k))) / Rational(e)).canonical();
      ++counted[phase];
      if (mind <= kInterior) interior.push_back(phase);
    }
  }
  for (auto& ph : interior) fp.phases[ph] = counted[ph];
  return fp;
}

bool oracle_matches(const ClassSum& cs, const SpectralFingerprint& fp) {
  if (cs.is_zero()) return fp.phases.empty();
  if (!fp.direction || fp.phases.empty()) return false;
  for (auto& [c, m] : cs.terms())
    if (Index2{c.p, c.q} != *fp.direction) return false;
  auto congruent = [](const PhaseExponent& a, const PhaseExponent& b) { return a.congruent_mod_lattice(b); };
  for (auto& [ph, count] : fp.phases) {
    Int want = 0;
    for (auto& [c, m] : cs.terms())
      if (congruent(c.alpha, ph)) want += m;
    if (want != count) return false;
  }
  for (auto& [c, m] : cs.terms()) {
    bool seen = false;
    for (auto& [ph, count] : fp.phases) seen |= congruent(c.alpha, ph);
    if (!seen) return false;
  }
  return true;
}

}  // namespace hopfish
