#include <doctest.h>

#include "hopfish/error.hpp"
#include "hopfish/text.hpp"
#include "test_support.hpp"

using namespace hopfish;
using namespace hopfish::testing;

TEST_CASE("algebra literal") {
  auto a = parse_algebra("a(1,0) + e{1/2 L} * a(0,1)");
  AlgebraElement want = basis(1, 0) + basis(0, 1, SymScalar::phase(PhaseExponent::lambda(Rational(1, 2))));
  CHECK(a == want);
  CHECK(format(basis(1, 1, SymScalar::phase(PhaseExponent::lambda(Rational(1))))) == "e{ 1 L } * a(1,1)");
  CHECK(parse_algebra("-a(2,-3)") == basis(2, -3, SymScalar(-1)));
  CHECK(parse_algebra("(1/2-3i) * e{ T - 2 A1 } * a(0,0)") ==
        basis(0, 0, SymScalar(Gaussian(Rational(1, 2), Rational(-3)), PhaseExponent(Rational(1), Rational(0), {{1, Rational(-2)}}))));
  CHECK(parse_algebra("0").is_zero());
  CHECK(parse_algebra("a(1,0) - a(1,0)").is_zero());
  CHECK(parse_algebra("2i * a(0,1)") == basis(0, 1, SymScalar(Gaussian(Rational(0), Rational(2)))));
}

TEST_CASE("class literal") {
  auto c = parse_class("T( 1/2 L ; 1, 1 )");
  CHECK(c == ModuleClass(PhaseExponent::lambda(Rational(1, 2)), 1, 1));
  CHECK(format(c) == "T( 1/2 L ; 1, 1 )");
  CHECK(format(ModuleClass(PhaseExponent(), 0, 1)) == "T( 0 ; 0, 1 )");
  CHECK(parse_class("T(0;0,1)") == ModuleClass(PhaseExponent(), 0, 1));
  CHECK_THROWS_AS(parse_class("T( 0 ; 0, 0 )"), ParseError);
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_element("a(1,");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  try {
    parse_element("a(1,0) + d(0,0,0)");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 9);
  }
  try {
    parse_element("a(1,0) junk");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(parse_element("e{ 1 Q } * a(0,0)"), ParseError);
  CHECK_THROWS_AS(parse_element("1/0 * a(0,0)"), ParseError);
  CHECK_THROWS_AS(parse_element(""), ParseError);
}

TEST_CASE("atom kinds") {
  CHECK(std::holds_alternative<DeltaVector>(parse_element("d(1,2,3)")));
  CHECK(std::holds_alternative<EpsilonVector>(parse_element("eps(-1)")));
  CHECK(std::holds_alternative<SVector>(parse_element("s(0,1)")));
  CHECK(std::holds_alternative<XiVector>(parse_element("e{A1} * xi(3)")));
  CHECK(std::holds_alternative<ModuleClass>(parse_element("T( A1 ; 2, 3 )")));
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(rng);
    CHECK(parse_algebra(format(a)) == a);

    DeltaVector d;
    EpsilonVector e;
    SVector s;
    Coords x;
    for (int t = 0; t < 3; ++t) {
      d.add_term({random_index(rng), random_index(rng), random_index(rng)}, random_scalar(rng));
      e.add_term(random_index(rng), random_scalar(rng));
      s.add_term({random_index(rng), random_index(rng)}, random_scalar(rng));
      x.add_term(random_index(rng), random_scalar(rng));
    }
    if (!d.is_zero()) CHECK(std::get<DeltaVector>(parse_element(format(d))) == d);
    if (!e.is_zero()) CHECK(std::get<EpsilonVector>(parse_element(format(e))) == e);
    if (!s.is_zero()) CHECK(std::get<SVector>(parse_element(format(s))) == s);
    if (!x.is_zero()) CHECK(std::get<XiVector>(parse_element(format(x))).coords == x);

    auto ex = random_exponent(rng);
    CHECK(parse_exponent(format_exponent(ex)) == ex);
    CHECK(parse_exponent(format_phase(ex)) == ex);

    Int p = random_index(rng), q = random_index(rng);
    if (p == 0 && q == 0) q = 1;
    ModuleClass c(ex, p, q);
    CHECK(parse_class(format(c)) == c);
  }
}

TEST_CASE("tensor text") {
  auto t = parse_tensor("a(1,0) (x) a(0,1)");
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms[0].first == basis(1, 0));
  CHECK(t.terms[0].second == basis(0, 1));
  auto u = parse_tensor("a(1,0)");
  CHECK(u.terms[0].second == unit());
  try {
    parse_tensor("a(1,0) (x) a(0,");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 15);
  }
}

TEST_CASE("json") {
  CHECK(to_json(Rational(3)) == "3");
  CHECK(to_json(Rational(-1, 2)) == "-1/2");
  auto j = to_json(PhaseExponent(Rational(1, 4), Rational(1), {{1, Rational(2)}}));
  CHECK(j["tau"] == "1/4");
  CHECK(j["lam"] == "1");
  CHECK(j["alphas"]["1"] == "2");
  CHECK(to_json(ClassSum()).dump() == "[]");
  auto cs = to_json(ClassSum::of(ModuleClass(PhaseExponent(), 1, 1), 2));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0]["mult"] == 2);
  CHECK(cs[0]["p"] == 1);
}
