#include <doctest.h>

#include <cmath>
#include <random>

#include "hopfish/algebra.hpp"
#include "hopfish/error.hpp"
#include "test_support.hpp"

using namespace hopfish;

namespace {

SymScalar el(Rational c) { return SymScalar::phase(PhaseExponent::lambda(c)); }

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("basis products") {
  CHECK(mul(basis(1, 0), basis(0, 1)) == basis(1, 1, el(1)));
  CHECK(mul(basis(0, 1), basis(1, 0)) == basis(1, 1));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto x = testing::random_element(rng);
    CHECK(mul(unit(), x) == x);
    CHECK(mul(x, unit()) == x);
  }
}

TEST_CASE("star") {
  CHECK(star(basis(2, 3)) == basis(-2, -3, el(6)));
  CHECK(star(unit()) == unit());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto x = testing::random_element(rng), y = testing::random_element(rng);
    CHECK(star(star(x)) == x);
    CHECK(star(mul(x, y)) == mul(star(y), star(x)));
  }
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    auto a = testing::random_element(rng), b = testing::random_element(rng), c = testing::random_element(rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("basis is unitary") {
  for (Int n = -10; n <= 10; ++n)
    for (Int l = -10; l <= 10; ++l) CHECK(mul(star(basis(n, l)), basis(n, l)) == unit());
}

TEST_CASE("degrees and grading") {
  auto [mx, mn] = degree_extrema(basis(1, 0) + basis(0, 1));
  CHECK(mx == Degree(Index2{1, 0}));
  CHECK(mn == Degree(Index2{0, 1}));
  auto [ux, un] = degree_extrema(unit());
  CHECK(ux == Degree(Index2{0, 0}));
  CHECK(un == Degree(Index2{0, 0}));
  auto [zx, zn] = degree_extrema(AlgebraElement{});
  CHECK(!zx);
  CHECK(!zn);
  CHECK(Degree{} < Degree(Index2{-100, -100}));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    auto a = testing::random_element(rng), b = testing::random_element(rng);
    auto ab = mul(a, b);
    REQUIRE(!ab.is_zero());
    auto [ax, an] = degree_extrema(a);
    auto [bx, bn] = degree_extrema(b);
    auto [px, pn] = degree_extrema(ab);
    CHECK(*px == Index2{ax->first + bx->first, ax->second + bx->second});
    CHECK(*pn == Index2{an->first + bn->first, an->second + bn->second});
  }
}

TEST_CASE("inverses") {
  for (Int n = -3; n <= 3; ++n)
    for (Int l = -3; l <= 3; ++l) {
      auto inv = invert(basis(n, l));
      CHECK(inv == basis(-n, -l, el(n * l)));
      CHECK(mul(basis(n, l), inv) == unit());
      CHECK(mul(inv, basis(n, l)) == unit());
    }
  CHECK(invert(unit()) == unit());
  CHECK(error_of([] { invert(basis(1, 0) + basis(0, 1)); }) == ErrorKind::NotInvertible);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto u = testing::random_unitary_monomial(rng);
    CHECK(invert(u) == star(u));
    auto m = basis(2, -1, testing::random_monomial(rng));
    CHECK(mul(m, invert(m)) == unit());
  }
}

TEST_CASE("roots") {
  auto r = dth_root(basis(2, 2), 2);
  REQUIRE(r);
  CHECK(*r == basis(1, 1, el(Rational(-1, 2))));
  CHECK(power(*r, 2) == basis(2, 2));
  CHECK(!dth_root(basis(2, 1), 2));
  CHECK(*dth_root(basis(3, -5), 1) == basis(3, -5));
  CHECK(root_order(basis(2, 2)) == 2);
  CHECK(root_order(basis(3, 1)) == 1);
  CHECK(root_order(basis(0, 4)) == 4);
  CHECK(error_of([] { root_order(unit()); }) == ErrorKind::ZeroIndex);
  CHECK(error_of([] { dth_root(basis(1, 0) + basis(0, 1), 2); }) == ErrorKind::NotUnitaryMonomial);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> dd(1, 4), idx(-3, 3);
  for (int t = 0; t < 300; ++t) {
    Int d = dd(rng);
    auto a = basis(d * idx(rng), d * idx(rng), testing::random_phase(rng));
    auto root = dth_root(a, d);
    REQUIRE(root);
    CHECK(power(*root, d) == a);
    auto b = testing::random_unitary_monomial(rng);
    if (auto rb = dth_root(b, d)) CHECK(power(*rb, d) == b);
  }
}

TEST_CASE("convolution agrees with the product") {
  auto g = Assignment::golden();
  for (Int k = -2; k <= 2; ++k) {
    double theta = 0.3 * static_cast<double>(k) + 0.1;
    auto lhs = convolve_numeric(basis(1, 0), basis(0, 1), theta, k, g);
    auto rhs = eval_function(mul(basis(1, 0), basis(0, 1)), theta, k, g);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(-M_PI, M_PI), al(-5, 5);
  std::uniform_int_distribution<int> kk(-6, 6);
  for (int t = 0; t < 20; ++t) {
    auto a = testing::random_element(rng, 5), b = testing::random_element(rng, 5);
    Assignment as = g;
    as.alphas[1] = al(rng);
    as.alphas[2] = al(rng);
    for (int s = 0; s < 64; ++s) {
      double theta = th(rng);
      Int k = kk(rng);
      CHECK(std::abs(convolve_numeric(unit(), b, theta, k, as) - eval_function(b, theta, k, as)) < 1e-9);
      CHECK(std::abs(convolve_numeric(a, b, theta, k, as) - eval_function(mul(a, b), theta, k, as)) < 1e-9);
    }
  }
  CHECK(error_of([] { convolve_numeric(unit(), unit(), 0, 0, {}); }) == ErrorKind::MissingSymbol);
}
