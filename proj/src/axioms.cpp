#include "hopfish/axioms.hpp"

#include <random>
#include <set>
#include <sstream>

#include "hopfish/error.hpp"
#include "hopfish/text.hpp"

namespace hopfish {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j = {{"axiom", r.axiom}, {"trials", r.trials}, {"window", r.window}, {"seed", r.seed}, {"passed", r.passed}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

std::uint64_t trial_seed(std::uint64_t master, Int t) {
  // splitmix64
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

Int pick(Rng& rng, Int w) { return std::uniform_int_distribution<Int>(-w, w)(rng); }

SymScalar random_coeff(Rng& rng) {
  Rational lam(std::uniform_int_distribution<Int>(-4, 4)(rng), std::uniform_int_distribution<Int>(1, 3)(rng));
  Rational tau(std::uniform_int_distribution<Int>(0, 7)(rng), 8);
  PhaseExponent e(tau, lam);
  if (rng() % 3 == 0) e += PhaseExponent::alpha(1, Rational(std::uniform_int_distribution<Int>(-2, 2)(rng)));
  Int mag = std::uniform_int_distribution<Int>(1, 3)(rng);
  return SymScalar(Gaussian(mag), e);
}

AlgebraElement random_algebra(Rng& rng, Int w, int max_terms = 2) {
  AlgebraElement a;
  int n = std::uniform_int_distribution<int>(1, max_terms)(rng);
  for (int i = 0; i < n; ++i) a.add_term({pick(rng, w), pick(rng, w)}, random_coeff(rng));
  return a;
}

SymScalar drop_lambda(const SymScalar& s) {
  SymScalar out;
  for (auto& [e, c] : s.terms()) out += SymScalar(c, e.with_lam(Rational(0)));
  return out;
}

template <class V>
V drop_lambda(const V& v) {
  V out;
  for (auto& [k, c] : v.terms()) out.add_term(k, drop_lambda(c));
  return out;
}

CheckReport report(const std::string& axiom, Int trials, Int window, std::uint64_t seed) {
  CheckReport r;
  r.axiom = axiom;
  r.trials = trials;
  r.window = window;
  r.seed = seed;
  return r;
}

void fail(CheckReport& r, std::string what) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = std::move(what);
}

void require_positive(Int trials, Int window) {
  if (trials < 1 || window < 0) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1 and window >= 0");
}

// (a (x) d) . (x (x) y) on the left-associated side, (d (x) a) . (x (x) y) on the right.
RawTripleSum balance_right(const RawTriple& t, TripleSide side, const AlgebraElement& x, const AlgebraElement& y) {
  RawTripleSum out;
  out.side = side;
  if (side == TripleSide::LeftAssoc)
    out.terms.push_back({t.a * x, delta_right_act(t.d, y), t.dp});
  else
    out.terms.push_back({t.a * y, delta_right_act(t.d, x), t.dp});
  return out;
}

RawTripleSum balance_left(const RawTriple& t, TripleSide side, const AlgebraElement& x, const AlgebraElement& y) {
  RawTripleSum out;
  out.side = side;
  out.terms.push_back({t.a, t.d, delta_left_act(tensor(x, y), t.dp)});
  return out;
}

}  // namespace

CheckHooks mutant(const std::string& axiom) {
  CheckHooks h;
  if (axiom == "h1") {
    h.iso = [](const TripleVector& t) {
      TripleVector out = coassoc_iso(t);
      TripleVector bent;
      bent.side = out.side;
      for (auto& [k, c] : out.v.terms()) bent.v.add_term(k, c * SymScalar::phase(PhaseExponent::lambda(Rational(k[0]))));
      return bent;
    };
  } else if (axiom == "h2") {
    h.counit = [](const RawCounitSum& t) { return drop_lambda(counit_reduce(t)); };
  } else if (axiom == "h3w") {
    h.pair = [](const HomMatrix& z, const SVector& s) {
      return hom_act(z, tensor(drop_lambda(s_generator(s)), unit())).coeff({0, 0});
    };
  } else if (axiom == "h4") {
    h.anti = [](const AlgebraElement& a) { return a; };
  } else if (axiom == "noanti") {
    h.hom = [](const HomMatrix& z, const PureTensorSum&) { return z; };
  } else {
    throw Error(ErrorKind::InvalidArgument, "no mutation fixture for " + axiom);
  }
  return h;
}

CheckReport check_h1(Int trials, Int window, std::uint64_t seed, const CheckHooks& hooks) {
  require_positive(trials, window);
  CheckReport r = report("h1", trials, window, seed);
  const Int w = window;
  for (Int t = 0; t < trials && r.passed; ++t) {
    Rng rng(trial_seed(seed, t));
    TripleVector basis_vec;
    basis_vec.side = TripleSide::LeftAssoc;
    basis_vec.v.add_term({pick(rng, w), pick(rng, w), pick(rng, w), pick(rng, w)}, random_coeff(rng));
    std::string where = "t=" + std::to_string(t) + " " + format(basis_vec);

    TripleVector image = hooks.iso(basis_vec);
    if (image.side != TripleSide::RightAssoc) {
      fail(r, where + ": iso lands on the wrong side");
      break;
    }
    if (coassoc_iso_inverse(image) != basis_vec) fail(r, where + ": iso not inverted");

    TripleAlgebraElement x;
    x.terms.push_back({random_algebra(rng, w), random_algebra(rng, w), random_algebra(rng, w)});
    AlgebraElement b = random_algebra(rng, w);

    auto lhs = hooks.iso(reduce_triple(triple_left_act(x, as_raw(basis_vec))));
    auto rhs = reduce_triple(triple_left_act(x, as_raw(image)));
    if (lhs != rhs)
      fail(r, where + " left action by " + format(x.terms[0][0]) + " (x) " + format(x.terms[0][1]) + " (x) " +
                  format(x.terms[0][2]));

    lhs = hooks.iso(reduce_triple(triple_right_act(as_raw(basis_vec), b)));
    rhs = reduce_triple(triple_right_act(as_raw(image), b));
    if (lhs != rhs) fail(r, where + " right action by " + format(b));

    // reductions respect the balance over A (x) A on both sides
    AlgebraElement y0 = random_algebra(rng, w, 1), y1 = random_algebra(rng, w, 1);
    for (TripleSide side : {TripleSide::LeftAssoc, TripleSide::RightAssoc}) {
      RawTriple raw{random_algebra(rng, w, 1), d_basis(pick(rng, w), pick(rng, w), pick(rng, w), random_coeff(rng)),
                    d_basis(pick(rng, w), pick(rng, w), pick(rng, w), random_coeff(rng))};
      if (reduce_triple(balance_right(raw, side, y0, y1)) != reduce_triple(balance_left(raw, side, y0, y1)))
        fail(r, where + " balance by " + format(y0) + " (x) " + format(y1) +
                    (side == TripleSide::LeftAssoc ? " on the left side" : " on the right side"));
    }
  }
  return r;
}

CheckReport check_h2(Int trials, Int window, std::uint64_t seed, const CheckHooks& hooks) {
  require_positive(trials, window);
  CheckReport r = report("h2", trials, window, seed);
  const Int w = window;
  for (CounitSide side : {CounitSide::EpsilonA, CounitSide::AEpsilon}) {
    RawCounitSum base{side, {{e_basis(0), unit(), d_basis(0, 0, 0)}}};
    if (hooks.counit(base) != unit()) fail(r, "basepoint does not reduce to a(0,0)");
  }
  for (Int t = 0; t < trials && r.passed; ++t) {
    Rng rng(trial_seed(seed, t));
    for (CounitSide side : {CounitSide::EpsilonA, CounitSide::AEpsilon}) {
      const char* tag = side == CounitSide::EpsilonA ? " (eps (x) A side)" : " (A (x) eps side)";
      RawCounit raw{e_basis(pick(rng, w), random_coeff(rng)), random_algebra(rng, w, 1),
                    d_basis(pick(rng, w), pick(rng, w), pick(rng, w), random_coeff(rng))};
      RawCounitSum x{side, {raw}};
      std::string where = "t=" + std::to_string(t) + " " + format(raw.e) + ", " + format(raw.a) + ", " +
                          format(raw.d) + tag;
      AlgebraElement b = random_algebra(rng, w);
      AlgebraElement base = hooks.counit(x);
      if (hooks.counit(counit_left_act(b, x)) != b * base) fail(r, where + " left action by " + format(b));
      if (hooks.counit(counit_right_act(x, b)) != base * b) fail(r, where + " right action by " + format(b));

      AlgebraElement y0 = random_algebra(rng, w, 1), y1 = random_algebra(rng, w, 1);
      RawCounit moved = raw;
      if (side == CounitSide::EpsilonA) {
        moved.e = epsilon_act(raw.e, y0);
        moved.a = raw.a * y1;
      } else {
        moved.a = raw.a * y0;
        moved.e = epsilon_act(raw.e, y1);
      }
      RawCounit pushed = raw;
      pushed.d = delta_left_act(tensor(y0, y1), raw.d);
      if (hooks.counit({side, {moved}}) != hooks.counit({side, {pushed}}))
        fail(r, where + " balance by " + format(y0) + " (x) " + format(y1));
    }
  }
  return r;
}

CheckReport check_h3_weak(Int trials, Int window, std::uint64_t seed, const CheckHooks& hooks) {
  require_positive(trials, window);
  CheckReport r = report("h3w", trials, window, seed);
  const Int w = window;
  for (Int t = 0; t < trials && r.passed; ++t) {
    Rng rng(trial_seed(seed, t));
    HomMatrix z;
    SVector s;
    int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i) {
      z.add_term({pick(rng, w), pick(rng, w)}, random_coeff(rng));
      s.add_term({pick(rng, w), pick(rng, w)}, random_coeff(rng));
    }
    AlgebraElement b = random_algebra(rng, w);
    std::string where = "t=" + std::to_string(t) + " zeta = " + format(z) + ", s = " + format(s) + ", b = " + format(b);

    if (hooks.pair(HomMatrix(), s) != SymScalar::zero() || hooks.pair(z, SVector()) != SymScalar::zero())
      fail(r, where + ": zero does not pair to zero");
    for (bool first_slot : {true, false}) {
      PureTensorSum x = first_slot ? tensor(b, unit()) : tensor(unit(), b);
      if (hooks.pair(hooks.hom(z, x), s) != hooks.pair(z, s_left_act(x, s)))
        fail(r, where + (first_slot ? ": not tensorial in the first slot" : ": not tensorial in the second slot"));
    }

    // finite-support nondegeneracy, N = support radius
    Int radius = 0;
    for (auto& [k, c] : z.terms()) radius = std::max({radius, std::abs(k.first), std::abs(k.second)});
    if (!z.is_zero()) {
      bool seen = false;
      for (Int n = -radius; n <= radius && !seen; ++n)
        for (Int l = -radius; l <= radius && !seen; ++l) seen = !hooks.pair(z, s_basis(n, l)).is_zero();
      if (!seen) fail(r, where + ": zeta pairs to zero with every s in the window");
    }
    radius = 0;
    for (auto& [k, c] : s.terms()) radius = std::max({radius, std::abs(k.first), std::abs(k.second)});
    if (!s.is_zero()) {
      bool seen = false;
      for (Int n = -radius; n <= radius && !seen; ++n)
        for (Int l = -radius; l <= radius && !seen; ++l)
          seen = !hooks.pair(HomMatrix::basis({l, n}, SymScalar::one()), s).is_zero();
      if (!seen) fail(r, where + ": s pairs to zero with every zeta in the window");
    }
  }
  return r;
}

CheckReport check_h4(Int window, const CheckHooks& hooks) {
  if (window < 0) throw Error(ErrorKind::InvalidArgument, "window must be >= 0");
  CheckReport r = report("h4", 1, window, 0);
  const Int w = window;
  const SVector s00 = s_basis(0, 0);
  std::set<Index2> images;
  for (Int n = -w; n <= w; ++n)
    for (Int l = -w; l <= w; ++l) {
      std::string where = "s(" + std::to_string(n) + "," + std::to_string(l) + ")";
      AlgebraElement g = s_generator(s_basis(n, l));
      if (g.size() != 1 || s_left_act(tensor(g, unit()), s00) != s_basis(n, l)) {
        fail(r, where + ": generator " + format(g) + " does not reproduce it");
        continue;
      }
      images.insert(g.terms().begin()->first);

      // a_{nl} (x) 1 and 1 (x) S(a_{nl}) agree on s_00
      AlgebraElement a = basis(n, l);
      AlgebraElement sa = hooks.anti(a);
      if (s_left_act(tensor(unit(), sa), s00) != s_left_act(tensor(a, unit()), s00))
        fail(r, where + ": (1 (x) S(a)) . s(0,0) differs from (a (x) 1) . s(0,0)");
      AlgebraElement closed = basis(-n, l, SymScalar::phase(PhaseExponent::lambda(Rational(-n * l))));
      if (sa != closed) fail(r, where + ": S(" + format(a) + ") = " + format(sa) + ", expected " + format(closed));
    }
  if (static_cast<Int>(images.size()) != (2 * w + 1) * (2 * w + 1)) fail(r, "s -> a_s is not injective on the window");
  return r;
}

CheckReport check_no_strong_antipode(Int support_radius, const CheckHooks& hooks) {
  if (support_radius < 1) throw Error(ErrorKind::InvalidArgument, "support radius must be >= 1");
  CheckReport r = report("noanti", 1, support_radius, 0);
  const Int w = support_radius;
  const PureTensorSum x = tensor(basis(0, 1), unit());

  // .(a01 (x) 1) strictly lowers the top l of every basis matrix, so the top
  // row of a fixed vector would have to vanish
  for (Int l = -w; l <= w && r.passed; ++l)
    for (Int n = -w; n <= w; ++n) {
      HomMatrix img = hooks.hom(HomMatrix::basis({l, n}, SymScalar::one()), x);
      bool lowers = !img.is_zero();
      for (auto& [k, c] : img.terms()) lowers = lowers && k.first < l;
      if (!lowers) {
        fail(r, "z(" + std::to_string(l) + "," + std::to_string(n) + ") . (a(0,1) (x) 1) = " + format(img));
        break;
      }
    }

  // z(a_{nl}) = delta_{n0} is fixed by a01 on either side
  const Assignment golden = Assignment::golden();
  for (Int n = -w; n <= w; ++n)
    for (Int l = -w; l <= w; ++l) {
      auto z = [](const AlgebraElement& a) {
        SymScalar s;
        for (auto& [k, c] : a.terms())
          if (k.first == 0) s += c;
        return s;
      };
      AlgebraElement a = basis(n, l);
      SymScalar want = z(a);
      if (z(basis(0, 1) * a) != want || z(a * basis(0, 1)) != want) {
        fail(r, "z is not an eigenvector of a(0,1) at " + format(a));
        continue;
      }
      auto v = scalar_eval(z(a * basis(0, 1)), golden);
      auto u = scalar_eval(want, golden);
      if (std::abs(v - u) > 1e-12) fail(r, "z . a(0,1) differs numerically at " + format(a));
    }
  return r;
}

}  // namespace hopfish
