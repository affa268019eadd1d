#include <doctest.h>

#include <random>

#include "hopfish/bimodules.hpp"
#include "test_support.hpp"

using namespace hopfish;
using testing::random_index;

namespace {

SymScalar el(Int c) { return SymScalar::phase(PhaseExponent::lambda(Rational(c))); }

DeltaVector random_delta(std::mt19937_64& rng, int terms = 3) {
  DeltaVector d;
  for (int i = 0; i < terms; ++i)
    d += d_basis(random_index(rng), random_index(rng), random_index(rng), testing::random_monomial(rng));
  return d;
}

SVector random_s(std::mt19937_64& rng, int terms = 3) {
  SVector s;
  for (int i = 0; i < terms; ++i) s += s_basis(random_index(rng), random_index(rng), testing::random_monomial(rng));
  return s;
}

EpsilonVector random_eps(std::mt19937_64& rng, int terms = 3) {
  EpsilonVector e;
  for (int i = 0; i < terms; ++i) e += e_basis(random_index(rng), testing::random_monomial(rng));
  return e;
}

HomMatrix random_hom(std::mt19937_64& rng, int terms = 4) {
  HomMatrix z;
  for (int i = 0; i < terms; ++i) z.add_term({random_index(rng), random_index(rng)}, testing::random_monomial(rng));
  return z;
}

PureTensorSum random_tensor(std::mt19937_64& rng) {
  PureTensorSum x = tensor(testing::random_element(rng, 2), testing::random_element(rng, 2));
  if (rng() % 2) x += tensor(testing::random_element(rng, 2), testing::random_element(rng, 2));
  return x;
}

// zeta as a right A-linear map Delta -> epsilon, from its matrix elements.
EpsilonVector zeta_apply(const HomMatrix& z, const DeltaVector& d) {
  EpsilonVector out;
  for (auto& [k, c] : d.terms()) {
    Int N1 = k[0], N2 = k[1], L = k[2];
    // d_{N1 N2 L} = e^{-i lambda N2 L} d_{N1-N2,0,0} . a_{N2,-L}
    EpsilonVector img;
    for (auto& [lk, zc] : z.terms())
      if (lk.second == N1 - N2) img += e_basis(lk.first, zc);
    out += (c * el(-N2 * L)) * epsilon_act(img, basis(N2, -L));
  }
  return out;
}

HomMatrix hom_act_oracle(const HomMatrix& z, const PureTensorSum& x, Int radius) {
  HomMatrix r;
  for (Int n = -radius; n <= radius; ++n) {
    auto img = zeta_apply(z, delta_left_act(x, d_basis(n, 0, 0)));
    for (auto& [l, c] : img.terms()) r.add_term({l, n}, c);
  }
  return r;
}

// (x (x) y) . s  realised as x s S(y) inside A
SVector s_act_oracle(const PureTensorSum& x, const SVector& s) {
  AlgebraElement as;
  for (auto& [k, c] : s.terms()) as += basis(k.first, k.second, c);
  AlgebraElement r;
  for (auto& [a, b] : x.terms) r += mul(mul(a, as), antipode(b));
  SVector out;
  for (auto& [k, c] : r.terms()) out.add_term(k, c);
  return out;
}

}  // namespace

TEST_CASE("coproduct actions") {
  CHECK(delta_right_act(d_basis(0, 0, 0), basis(1, 0)) == d_basis(1, 1, 0));
  CHECK(delta_right_act(d_basis(1, 2, 3), basis(1, 1)) == d_basis(2, 3, 2, el(2)));
  CHECK(delta_left_act(tensor(basis(0, 1), unit()), d_basis(0, 0, 0)) == d_basis(0, 0, -1));
  CHECK(delta_left_act(tensor(unit(), basis(0, 1)), d_basis(0, 0, 0)) == d_basis(0, 0, -1));
  CHECK(delta_left_act(tensor(basis(1, 0), basis(1, 0)), d_basis(0, 0, 0)) == d_basis(1, 1, 0));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    auto d = random_delta(rng);
    auto a = testing::random_element(rng, 3), b = testing::random_element(rng, 3);
    auto x = random_tensor(rng), y = random_tensor(rng);
    CHECK(delta_right_act(d, unit()) == d);
    CHECK(delta_left_act(tensor(unit(), unit()), d) == d);
    CHECK(delta_right_act(delta_right_act(d, a), b) == delta_right_act(d, mul(a, b)));
    CHECK(delta_left_act(x, delta_left_act(y, d)) == delta_left_act(tensor_mul(x, y), d));
    CHECK(delta_right_act(delta_left_act(x, d), a) == delta_left_act(x, delta_right_act(d, a)));
    // d_000 . a = (a (x) a_{m0}) . d_000 on basis elements
    Int m = random_index(rng), j = random_index(rng);
    CHECK(delta_right_act(d_basis(0, 0, 0), basis(m, j)) ==
          delta_left_act(tensor(basis(m, j), basis(m, 0)), d_basis(0, 0, 0)));
  }
}

TEST_CASE("counit action") {
  CHECK(epsilon_act(e_basis(2), basis(1, 1)) == e_basis(1, el(1)));
  CHECK(epsilon_act(e_basis(0), unit()) == e_basis(0));
  CHECK(epsilon_act(e_basis(0), basis(1, 0)) == e_basis(0));
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    auto e = random_eps(rng);
    auto a = testing::random_element(rng, 3), b = testing::random_element(rng, 3);
    CHECK(epsilon_act(epsilon_act(e, a), b) == epsilon_act(e, mul(a, b)));
  }
}

TEST_CASE("antipode bimodule") {
  for (Int m = -2; m <= 2; ++m)
    for (Int j = -2; j <= 2; ++j) {
      CHECK(s_left_act(tensor(basis(m, j), unit()), s_basis(0, 0)) == s_basis(m, j));
      CHECK(s_left_act(tensor(unit(), basis(m, j)), s_basis(0, 0)) == s_basis(-m, j, el(-m * j)));
    }
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto s = random_s(rng);
    auto x = random_tensor(rng), y = random_tensor(rng);
    CHECK(s_left_act(tensor(unit(), unit()), s) == s);
    CHECK(s_left_act(x, s_left_act(y, s)) == s_left_act(tensor_mul(x, y), s));
    CHECK(s_left_act(x, s) == s_act_oracle(x, s));
  }
}

TEST_CASE("antipode map") {
  CHECK(antipode(basis(1, 1)) == basis(-1, 1, el(-1)));
  CHECK(antipode(unit()) == unit());
  std::mt19937_64 rng(24);
  for (int t = 0; t < 300; ++t) {
    auto a = testing::random_element(rng), b = testing::random_element(rng);
    CHECK(antipode(antipode(a)) == a);
    CHECK(antipode(mul(a, b)) == mul(antipode(b), antipode(a)));
    CHECK(antipode(star(antipode(star(a)))) == a);
  }
}

TEST_CASE("hom action") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 50; ++t) {
    auto z = random_hom(rng);
    auto one = hom_act(z, tensor(basis(0, 1), unit()));
    for (auto& [k, c] : one.terms()) CHECK(c == el(-k.second) * z.coeff({k.first + 1, k.second}));
    Int m = random_index(rng), j = random_index(rng);
    auto two = hom_act(z, tensor(unit(), basis(m, j)));
    for (auto& [k, c] : two.terms()) CHECK(c == el(m * k.first) * z.coeff({k.first + j, k.second - m}));
    CHECK(hom_act(z, tensor(unit(), unit())) == z);
  }
  for (int t = 0; t < 200; ++t) {
    auto z = random_hom(rng);
    auto x = random_tensor(rng), y = random_tensor(rng);
    CHECK(hom_act(hom_act(z, x), y) == hom_act(z, tensor_mul(x, y)));
    CHECK(hom_act(z, x) == hom_act_oracle(z, x, 16));
  }
}

TEST_CASE("pairing") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 50; ++t) {
    auto z = random_hom(rng);
    CHECK(pairing(z, s_basis(0, 0)) == z.coeff({0, 0}));
    Int n = random_index(rng), l = random_index(rng);
    CHECK(pairing(z, s_basis(n, l)) == el(-n * l) * z.coeff({l, n}));
    CHECK(pairing(HomMatrix{}, random_s(rng)).is_zero());
  }
  for (int t = 0; t < 200; ++t) {
    auto z = random_hom(rng);
    auto s = random_s(rng);
    auto b = testing::random_element(rng, 2);
    CHECK(pairing(hom_act(z, tensor(b, unit())), s) == pairing(z, s_left_act(tensor(b, unit()), s)));
    CHECK(pairing(hom_act(z, tensor(unit(), b)), s) == pairing(z, s_left_act(tensor(unit(), b), s)));
  }
}

TEST_CASE("pairing is nondegenerate on finite supports") {
  std::mt19937_64 rng(27);
  const Int N = 3;
  for (int t = 0; t < 50; ++t) {
    auto z = random_hom(rng);
    bool all_zero = true;
    for (Int n = -N; n <= N; ++n)
      for (Int l = -N; l <= N; ++l) all_zero &= pairing(z, s_basis(n, l)).is_zero();
    CHECK(!all_zero);
    auto s = random_s(rng);
    all_zero = true;
    for (Int n = -N; n <= N; ++n)
      for (Int l = -N; l <= N; ++l) all_zero &= pairing(HomMatrix::basis({l, n}), s).is_zero();
    CHECK(!all_zero);
  }
}

TEST_CASE("triple reduction") {
  RawTripleSum t{TripleSide::LeftAssoc, {{unit(), d_basis(0, 0, 1), d_basis(0, 0, 0)}}};
  TripleVector want{TripleSide::LeftAssoc, {}};
  want.v.add_term({0, 0, 0, 1}, SymScalar::one());
  CHECK(reduce_triple(t) == want);

  TripleVector canon{TripleSide::LeftAssoc, {}};
  canon.v.add_term({1, 2, 3, 4}, SymScalar::one());
  CHECK(reduce_triple(as_raw(canon)) == canon);

  RawTripleSum moved{TripleSide::LeftAssoc, {{basis(1, 0), d_basis(0, 0, 0), d_basis(0, 0, 0)}}};
  TripleVector moved_want{TripleSide::LeftAssoc, {}};
  moved_want.v.add_term({0, 0, 1, 0}, SymScalar::one());
  CHECK(reduce_triple(moved) == moved_want);

  std::mt19937_64 rng(28);
  for (auto side : {TripleSide::LeftAssoc, TripleSide::RightAssoc}) {
    for (int t = 0; t < 150; ++t) {
      auto a = testing::random_element(rng, 2);
      auto d = random_delta(rng, 2), dp = random_delta(rng, 2);
      auto x = testing::random_element(rng, 2), y = testing::random_element(rng, 2);
      // balance over A (x) A: (a x (x) d y) (x) d' == (a (x) d) (x) (x (x) y) d'
      RawTripleSum lhs{side, {}}, rhs{side, {}};
      if (side == TripleSide::LeftAssoc) {
        lhs.terms.push_back({mul(a, x), delta_right_act(d, y), dp});
        rhs.terms.push_back({a, d, delta_left_act(tensor(x, y), dp)});
      } else {
        lhs.terms.push_back({mul(a, y), delta_right_act(d, x), dp});
        rhs.terms.push_back({a, d, delta_left_act(tensor(x, y), dp)});
      }
      auto r = reduce_triple(lhs);
      CHECK(r == reduce_triple(rhs));
      CHECK(reduce_triple(as_raw(r)) == r);
    }
  }
}

TEST_CASE("coassociativity isomorphism") {
  TripleVector t{TripleSide::LeftAssoc, {}};
  t.v.add_term({1, 2, 3, 5}, SymScalar::one());
  TripleVector want{TripleSide::RightAssoc, {}};
  want.v.add_term({3, 1, 2, 5}, SymScalar::one());
  CHECK(coassoc_iso(t) == want);
  TripleVector z{TripleSide::LeftAssoc, {}};
  z.v.add_term({0, 0, 0, 0}, SymScalar::one());
  TripleVector zw{TripleSide::RightAssoc, {}};
  zw.v.add_term({0, 0, 0, 0}, SymScalar::one());
  CHECK(coassoc_iso(z) == zw);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    TripleVector r{TripleSide::LeftAssoc, {}};
    for (int k = 0; k < 3; ++k)
      r.v.add_term({random_index(rng), random_index(rng), random_index(rng), random_index(rng)},
                   testing::random_monomial(rng));
    CHECK(coassoc_iso_inverse(coassoc_iso(r)) == r);
  }
}

TEST_CASE("counit reductions") {
  for (auto side : {CounitSide::EpsilonA, CounitSide::AEpsilon}) {
    RawCounitSum base{side, {{e_basis(0), unit(), d_basis(0, 0, 0)}}};
    CHECK(counit_reduce(base) == unit());
    CHECK(counit_reduce(RawCounitSum{side, {}}).is_zero());
    std::mt19937_64 rng(side == CounitSide::EpsilonA ? 30 : 31);
    for (int t = 0; t < 150; ++t) {
      RawCounitSum x{side, {{random_eps(rng, 2), testing::random_element(rng, 2), random_delta(rng, 2)}}};
      auto a = testing::random_element(rng, 2), b = testing::random_element(rng, 2);
      CHECK(counit_reduce(counit_right_act(x, a)) == mul(counit_reduce(x), a));
      CHECK(counit_reduce(counit_left_act(b, x)) == mul(b, counit_reduce(x)));
      // balance over A (x) A
      auto p = testing::random_element(rng, 2), q = testing::random_element(rng, 2);
      auto& tm = x.terms[0];
      RawCounitSum lhs{side, {}}, rhs{side, {{tm.e, tm.a, delta_left_act(tensor(p, q), tm.d)}}};
      if (side == CounitSide::EpsilonA)
        lhs.terms.push_back({epsilon_act(tm.e, p), mul(tm.a, q), tm.d});
      else
        lhs.terms.push_back({epsilon_act(tm.e, q), mul(tm.a, p), tm.d});
      CHECK(counit_reduce(lhs) == counit_reduce(rhs));
    }
    // surjective: (e_0 (x) a) (x) d_000 |-> a
    std::mt19937_64 rng2(32);
    auto a = testing::random_element(rng2);
    CHECK(counit_reduce(RawCounitSum{side, {{e_basis(0), a, d_basis(0, 0, 0)}}}) == a);
  }
}
