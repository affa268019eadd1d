#include <doctest.h>

#include <random>

#include "hopfish/error.hpp"
#include "hopfish/phase.hpp"
#include "test_support.hpp"

using namespace hopfish;

TEST_CASE("canonical exponents") {
  CHECK(exp_canonicalize(PhaseExponent::turns(Rational(5, 2))) == PhaseExponent::turns(Rational(1, 2)));
  CHECK(exp_canonicalize(PhaseExponent::turns(Rational(-1, 3))) == PhaseExponent::turns(Rational(2, 3)));
  auto e = PhaseExponent::lambda(Rational(3, 2));
  CHECK(exp_canonicalize(e) == e);
  PhaseExponent z(Rational(0), Rational(1), {{1, Rational(2)}, {1, Rational(-2)}});
  CHECK(z.alphas().empty());
}

TEST_CASE("addition") {
  auto l = SymScalar::phase(PhaseExponent::lambda(1));
  CHECK(l + SymScalar::zero() == l);
  CHECK((l + SymScalar(-1) * l).is_zero());
  auto s = l + SymScalar::phase(PhaseExponent::lambda(2));
  CHECK(s.terms().size() == 2);
}

TEST_CASE("multiplication") {
  auto l = SymScalar::phase(PhaseExponent::lambda(1));
  CHECK(l * l == SymScalar::phase(PhaseExponent::lambda(2)));
  auto h = SymScalar::phase(PhaseExponent::turns(Rational(1, 2)));
  CHECK(h * h == SymScalar::one());
  CHECK((h * h).terms() == SymScalar::one().terms());
  auto a = SymScalar::phase(PhaseExponent::alpha(1));
  CHECK((SymScalar::i() * a) * (SymScalar(-1) * SymScalar::i() * a.inverse()) == SymScalar::one());
}

TEST_CASE("conjugation and inverse") {
  auto x = SymScalar::phase(PhaseExponent::lambda(6));
  CHECK(x.conj() == SymScalar::phase(PhaseExponent::lambda(-6)));
  CHECK(SymScalar::one().conj() == SymScalar::one());
  SymScalar y(Gaussian(1, 1), PhaseExponent::alpha(1));
  CHECK(y.conj() == SymScalar(Gaussian(1, -1), PhaseExponent::alpha(1, -1)));
  CHECK(SymScalar(2).inverse() == SymScalar(Gaussian(Rational(1, 2))));
  CHECK(x.inverse() == x.conj());
  auto bad = x + SymScalar::one();
  try {
    (void)bad.inverse();
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonMonomial);
  }
  try {
    (void)SymScalar::zero().inverse();
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroScalar);
  }
}

TEST_CASE("roots of unity cancel") {
  SymScalar s;
  for (int k = 0; k < 3; ++k) s += SymScalar::phase(PhaseExponent(Rational(k, 3), Rational(1)));
  CHECK(s.is_zero());
  SymScalar t = SymScalar::one() + SymScalar::phase(PhaseExponent::turns(Rational(1, 3)));
  CHECK(t == -SymScalar::phase(PhaseExponent::turns(Rational(2, 3))));
  CHECK(t != SymScalar::one());
  CHECK(cyclotomic_sum_is_zero({{Rational(1, 5), Gaussian(1)}, {Rational(2, 5), Gaussian(1)},
                                {Rational(3, 5), Gaussian(1)}, {Rational(4, 5), Gaussian(1)},
                                {Rational(0), Gaussian(1)}}));
  CHECK(!cyclotomic_sum_is_zero({{Rational(1, 5), Gaussian(1)}, {Rational(0), Gaussian(1)}}));
}

TEST_CASE("evaluation") {
  auto g = Assignment::golden();
  CHECK(std::abs(SymScalar::one().eval({}) - std::complex<double>(1, 0)) < 1e-12);
  auto l = SymScalar::phase(PhaseExponent::lambda(1));
  CHECK(std::abs(l.eval(g) - std::polar(1.0, *g.lambda)) < 1e-12);
  CHECK(std::abs(SymScalar::phase(PhaseExponent::turns(Rational(1, 2))).eval({}) + 1.0) < 1e-12);
  try {
    (void)l.eval({});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingSymbol);
  }
}

TEST_CASE("ring laws on random scalars") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    auto x = testing::random_scalar(rng), y = testing::random_scalar(rng), z = testing::random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    auto m = testing::random_monomial(rng);
    CHECK(m * m.inverse() == SymScalar::one());
  }
}

TEST_CASE("numeric consistency") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int t = 0; t < 100; ++t) {
    auto x = testing::random_scalar(rng), y = testing::random_scalar(rng);
    for (int k = 0; k < 10; ++k) {
      Assignment as;
      as.lambda = u(rng);
      as.alphas[1] = u(rng);
      as.alphas[2] = u(rng);
      auto lhs = (x * y).eval(as), rhs = x.eval(as) * y.eval(as);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}
