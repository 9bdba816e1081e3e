#include "doctest.h"
#include "test_support.hpp"

using namespace burau;
using testing_support::random_poly;

namespace {

const CoefficientRing Z = CoefficientRing::integers();

LaurentPoly P(const char* text, CoefficientRing ring = Z) { return LaurentPoly::parse(text, ring); }

std::vector<CoefficientRing> all_rings() {
  return {CoefficientRing::integers(), CoefficientRing::rationals(),
          CoefficientRing::integers_mod(7), CoefficientRing::integers_mod(12)};
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((P("q + 1") * P("q - 1")) == P("q^2 - 1"));
  auto z7 = CoefficientRing::integers_mod(7);
  CHECK((P("3*q", z7) + P("4*q", z7)).is_zero());
  CHECK((P("q") * P("q^-1")) == P("1"));
  CHECK((-P("q^2 - 1")) == P("-q^2 + 1"));
  CHECK(P("q^3").shifted(-5) == P("q^-2"));
  CHECK(P("2*q^3 - q^-1").bar() == P("2*q^-3 - q"));
}

TEST_CASE("ring mismatch is an error") {
  auto z5 = CoefficientRing::integers_mod(5);
  CHECK_THROWS_AS(P("q") + P("q", z5), RingMismatch);
  CHECK_THROWS_AS(P("q") * P("q", CoefficientRing::rationals()), RingMismatch);
  CHECK_THROWS_AS(CoefficientRing::integers_mod(1), std::invalid_argument);
  CHECK_THROWS(LaurentPoly::constant(Z, Rational(1, 2)));
}

TEST_CASE("coefficients are reduced into the ring") {
  auto z5 = CoefficientRing::integers_mod(5);
  CHECK(P("-1", z5).coefficient(0) == Rational(4));
  CHECK(P("1/2", z5) == P("3", z5));  // 2 * 3 = 6 = 1 mod 5
  CHECK_THROWS(P("1/2", CoefficientRing::integers_mod(6)));
}

TEST_CASE("evaluate") {
  CHECK(P("1 + q^2").evaluate(-1) == Rational(2));
  CHECK(P("q").evaluate(1) == Rational(1));
  CHECK((P("q") - P("q")).evaluate(17) == Rational(0));
  CHECK(P("q^-2 + q").evaluate(-1) == Rational(0));
  CHECK(P("q^-1", CoefficientRing::rationals()).evaluate(2) == Rational(1, 2));
  CHECK_THROWS_AS(P("q^-1").evaluate(2), std::domain_error);
  CHECK(P("q^2 + 1").evaluate(2) == Rational(5));  // no inverse needed
  CHECK_THROWS_AS(P("q^-1", CoefficientRing::integers_mod(6)).evaluate(2), std::domain_error);
  CHECK(P("q^-1", CoefficientRing::integers_mod(7)).evaluate(2) == Rational(4));
}

TEST_CASE("reduce_mod") {
  CHECK(P("7*q + 3").reduce_mod(7) == P("3", CoefficientRing::integers_mod(7)));
  CHECK(P("6").reduce_mod(6).is_zero());
  CHECK(P("-1").reduce_mod(5) == P("4", CoefficientRing::integers_mod(5)));
  CHECK_THROWS(P("q").reduce_mod(1));
  CHECK_THROWS_AS(P("q", CoefficientRing::rationals()).reduce_mod(3), RingMismatch);
}

TEST_CASE("degree_span and as_monomial") {
  auto span = P("q^-2 + q^3").degree_span();
  REQUIRE(span);
  CHECK(*span == std::make_pair(-2, 3));
  CHECK(*P("5").degree_span() == std::make_pair(0, 0));
  CHECK_FALSE(LaurentPoly(Z).degree_span());
  auto mono = P("-q^4").as_monomial();
  REQUIRE(mono);
  CHECK(mono->first == Rational(-1));
  CHECK(mono->second == 4);
  CHECK_FALSE(P("q + 1").as_monomial());
}

TEST_CASE("text format round trips") {
  CHECK(P("-q^2 + 1").to_string() == "-q^2 + 1");
  CHECK(P("1 - q^2").to_string() == "-q^2 + 1");
  CHECK(P("q^-2").to_string() == "q^-2");
  CHECK(LaurentPoly::parse("3/2*q^2 - 1/3", CoefficientRing::rationals()).to_string() ==
        "3/2*q^2 - 1/3");
  CHECK(LaurentPoly(Z).to_string() == "0");
  CHECK(P("0").is_zero());
  CHECK_THROWS(P("q^"));
  CHECK_THROWS(P("2q"));
  CHECK_THROWS(P(""));
  CHECK(CoefficientRing::parse("Z/12Z") == CoefficientRing::integers_mod(12));
  CHECK(CoefficientRing::parse("Q") == CoefficientRing::rationals());

  std::mt19937_64 rng(11);
  for (const auto& ring : all_rings()) {
    for (int k = 0; k < 300; ++k) {
      LaurentPoly x = random_poly(rng, ring);
      CHECK(LaurentPoly::parse(x.to_string(), ring) == x);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (const auto& ring : all_rings()) {
    CAPTURE(ring.name());
    for (int k = 0; k < 1000; ++k) {
      LaurentPoly x = random_poly(rng, ring);
      LaurentPoly y = random_poly(rng, ring);
      LaurentPoly z = random_poly(rng, ring);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE((x + y) + z == x + (y + z));
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE(x * y == y * x);
      REQUIRE((x - x).is_zero());
      REQUIRE((x * y).bar() == x.bar() * y.bar());
    }
  }
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (std::int64_t p : {2, 5, 6, 12, 16}) {
    for (int k = 0; k < 300; ++k) {
      LaurentPoly x = random_poly(rng, Z, 5, 5, 40);
      LaurentPoly y = random_poly(rng, Z, 5, 5, 40);
      REQUIRE((x * y).reduce_mod(p) == x.reduce_mod(p) * y.reduce_mod(p));
      REQUIRE((x + y).reduce_mod(p) == x.reduce_mod(p) + y.reduce_mod(p));
    }
  }
}

TEST_CASE("evaluate is multiplicative") {
  std::mt19937_64 rng(9);
  auto q_ring = CoefficientRing::rationals();
  for (int k = 0; k < 500; ++k) {
    LaurentPoly x = random_poly(rng, Z);
    LaurentPoly y = random_poly(rng, Z);
    for (int q0 : {1, -1}) {
      REQUIRE((x * y).evaluate(q0) == x.evaluate(q0) * y.evaluate(q0));
    }
    LaurentPoly xq = random_poly(rng, q_ring);
    LaurentPoly yq = random_poly(rng, q_ring);
    REQUIRE((xq * yq).evaluate(Rational(2, 3)) == xq.evaluate(Rational(2, 3)) * yq.evaluate(Rational(2, 3)));
  }
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
}
