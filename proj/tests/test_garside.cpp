#include <numeric>

#include "burau/burau.hpp"
#include "burau/garside.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace burau;
using testing_support::random_word;

namespace {

// Reflection length through the fixed space: l_T(w) = codim Fix(w).
int carter_length(const DualGarside& d, int elt) {
  return d.rank() - fixed_space_dimension(d.matrix(elt), d.rank());
}

int exponent_sum(const BraidWord& w) {
  return std::accumulate(w.begin(), w.end(), 0, [](int acc, int l) { return acc + (l > 0 ? 1 : -1); });
}

const DualGarside& a2() {
  static const DualGarside d(preset("A2"));
  return d;
}
const DualGarside& a3() {
  static const DualGarside d(preset("A3"));
  return d;
}
const DualGarside& d4() {
  static const DualGarside d(preset("D4"));
  return d;
}

}  // namespace

TEST_CASE("q = -1 matrices") {
  auto g = preset("A2");
  IntMatrix s1 = coxeter_generator(g, 1);
  CHECK(s1 == IntMatrix{-1, 1, 0, 1});
  CHECK(multiply(s1, s1, 2) == IntMatrix{1, 0, 0, 1});
  CHECK(fixed_space_dimension(s1, 2) == 1);
  CHECK(fixed_space_dimension(coxeter_element(g), 2) == 0);
  CHECK(fixed_space_dimension(IntMatrix{1, 0, 0, 1}, 2) == 2);
}

TEST_CASE("group, reflections and interval sizes") {
  struct Expect {
    const DualGarside* d;
    std::size_t order;
    std::size_t reflections;
    int simples;
    int coxeter_number;
  };
  for (const auto& e : {Expect{&a2(), 6, 3, 5, 3}, Expect{&a3(), 24, 6, 14, 4}, Expect{&d4(), 192, 12, 50, 6}}) {
    const DualGarside& d = *e.d;
    CAPTURE(d.graph().name());
    CHECK(d.group_order() == e.order);
    CHECK(d.reflections().size() == e.reflections);
    CHECK(d.simple_count() == e.simples);
    CHECK(d.reflection_simples().size() == e.reflections);

    // Independent descriptions of T and of [1, gamma].
    std::size_t reflections = 0;
    int interval = 0;
    for (int w = 0; w < static_cast<int>(d.group_order()); ++w) {
      int lw = carter_length(d, w);
      REQUIRE(d.reflection_length(w) == lw);
      if (lw == 1) ++reflections;
      int rest = d.multiply(d.inverse(w), d.gamma());
      if (lw + carter_length(d, rest) == d.rank()) {
        ++interval;
        CHECK(d.simple_of(w) >= 0);
      } else {
        CHECK(d.simple_of(w) == -1);
      }
    }
    CHECK(reflections == e.reflections);
    CHECK(interval == e.simples);

    // gamma has order h in W, and so phi has order h on simples.
    int power = 0;
    for (int k = 1; k <= e.coxeter_number; ++k) {
      power = d.multiply(power, d.gamma());
      if (k < e.coxeter_number) CHECK(power != 0);
    }
    CHECK(power == 0);
    for (int s = 0; s < d.simple_count(); ++s) {
      int t = s;
      for (int k = 0; k < e.coxeter_number; ++k) t = d.phi(t);
      CHECK(t == s);
      CHECK(d.phi_inverse(d.phi(s)) == s);
    }
  }
}

TEST_CASE("interval structure") {
  const DualGarside& d = d4();
  CHECK(d.simple_element(d.identity_simple()) == 0);
  CHECK(d.simple_element(d.gamma_simple()) == d.gamma());
  CHECK(d.simple_length(d.gamma_simple()) == 4);
  for (int i = 1; i <= 4; ++i) {
    CHECK(d.simple_element(d.atom(i)) == d.generator(i));
    CHECK(d.reflections()[i - 1] == d.generator(i));
  }
  for (int a = 0; a < d.simple_count(); ++a) {
    int ea = d.simple_element(a);
    CHECK(d.multiply(d.simple_element(d.left_complement(a)), ea) == d.gamma());
    for (int b = 0; b < d.simple_count(); ++b) {
      int eb = d.simple_element(b);
      int la = carter_length(d, ea), lb = carter_length(d, eb);
      bool left = la + carter_length(d, d.multiply(d.inverse(ea), eb)) == lb;
      bool right = la + carter_length(d, d.multiply(eb, d.inverse(ea))) == lb;
      REQUIRE(d.divides(a, b) == left);
      REQUIRE(d.divides_right(a, b) == right);
      int g = d.gcd_right(a, b);
      CHECK(d.divides_right(g, a));
      CHECK(d.divides_right(g, b));
      int prod = d.product_if_simple(a, b);
      int elt = d.multiply(ea, eb);
      CHECK(prod == (la + lb == carter_length(d, elt) ? d.simple_of(elt) : -1));
    }
  }
}

TEST_CASE("lifts") {
  const DualGarside& d = d4();
  const auto Z = CoefficientRing::integers();
  auto dual = PairingForm::dual();
  for (int s = 0; s < d.simple_count(); ++s) {
    const BraidWord& lift = d.simple_lift(s);
    CHECK(exponent_sum(lift) == d.simple_length(s));
    // Image in W.
    int elt = 0;
    for (int l : lift) {
      int g = d.generator(std::abs(l));
      elt = d.multiply(elt, g);
    }
    CHECK(elt == d.simple_element(s));
    if (s != d.identity_simple()) CHECK(spread(word_matrix(d.graph(), lift, dual, Z)) <= 1);
  }
  for (int t : d.reflections()) CHECK(exponent_sum(d.reflection_lift(t)) == 1);
  CHECK(word_to_nf(d, d.simple_lift(d.gamma_simple())) == GarsideNF{1, {}});
  CHECK(spread(word_matrix(d.graph(), d.gamma_word(), dual, Z)) == 0);
}

TEST_CASE("normal forms of random words") {
  std::mt19937_64 rng(555);
  const auto Z = CoefficientRing::integers();
  auto dual = PairingForm::dual();
  for (const DualGarside* dp : {&a2(), &a3(), &d4()}) {
    const DualGarside& d = *dp;
    CAPTURE(d.graph().name());
    for (int k = 0; k < 500; ++k) {
      BraidWord w = random_word(rng, d.rank(), 1 + k % 12);
      REQUIRE(is_trivial_braid(d, concat(w, inverse(w))));
      REQUIRE(is_trivial_braid(d, concat(inverse(w), w)));
      BraidWord odd = concat(w, {1});
      if (exponent_sum(odd) % 2 != 0) CHECK_FALSE(is_trivial_braid(d, odd));
      GarsideNF nf = word_to_nf(d, w);
      CHECK(is_right_greedy(d, nf.simples));
      for (int s : nf.simples) {
        CHECK(s != d.identity_simple());
        CHECK(s != d.gamma_simple());
      }
      int length = nf.k * d.rank();
      for (int s : nf.simples) length += d.simple_length(s);
      CHECK(length == exponent_sum(w));
      BraidWord back = nf_to_word(d, nf);
      CHECK(word_to_nf(d, back) == nf);
      if (k % 10 == 0) {
        CHECK(word_matrix(d.graph(), back, dual, Z) == word_matrix(d.graph(), w, dual, Z));
      }
    }
  }
}

TEST_CASE("normal form examples") {
  const DualGarside& d = a3();
  CHECK(word_to_nf(d, {}) == GarsideNF{});
  CHECK(word_to_nf(d, {1, 2, 3}) == GarsideNF{1, {}});
  CHECK(word_to_nf(d, {-3, -2, -1}) == GarsideNF{-1, {}});
  DualGarside dd(preset("D4"));
  CHECK(word_to_nf(dd, {1}) == GarsideNF{0, {dd.atom(1)}});
  GarsideNF one = word_to_nf(d, {2});
  CHECK(one == GarsideNF{0, {d.atom(2)}});
  CHECK_FALSE(is_trivial_braid(d, {1, 2, 1, -2, -1}));
  CHECK(is_trivial_braid(d, {1, 2, 1, -2, -1, -2}));
  CHECK(is_trivial_braid(d, {1, 3, -1, -3}));
  CHECK_FALSE(is_trivial_braid(d, {1, 2, -1, -2}));
  CHECK(format_nf(d, GarsideNF{1, {d.atom(2)}}) == "γ^1 · [{2}[2]]");
  CHECK(nf_to_json(d, word_to_nf(d, {-1}))["gamma_power"] == -1);
}

TEST_CASE("samecurve conditions") {
  const DualGarside& d = a3();
  auto empty = samecurve_check(d, {}, 1);
  CHECK(empty.zero_power);
  CHECK(empty.append_greedy);
  CHECK_FALSE(empty.atom_not_dividing);
  CHECK_FALSE(empty.all());

  auto good = samecurve_check(d, {2}, 1);
  CHECK(good.extended.simples.size() == 2);
  CHECK(good.all());

  auto merged = samecurve_check(d, {1}, 2);
  CHECK(merged.extended.simples.size() == 1);
  CHECK_FALSE(merged.append_greedy);

  auto divides = samecurve_check(d, {1}, 1);
  CHECK_FALSE(divides.atom_not_dividing);

  auto negative = samecurve_check(d, {-2}, 1);
  CHECK_FALSE(negative.zero_power);
  CHECK_THROWS(samecurve_check(d, {}, 5));
}

TEST_CASE("finite type detection") {
  CHECK_THROWS_AS(DualGarside(preset("tildeA3")), NotFiniteType);
  CHECK_THROWS_AS(DualGarside(preset("K4")), NotFiniteType);
  CoxeterGraph inf(2);
  inf.set_label(1, 2, Label::Infinity);
  CHECK_THROWS_AS(DualGarside{inf}, NotFiniteType);
  CHECK_THROWS_AS(DualGarside(preset("D4"), {}, 100), NotFiniteType);
  DualGarside other(preset("A3"), {3, 1, 2});
  CHECK(other.simple_count() == 14);
  CHECK(other.gamma_word() == BraidWord{3, 1, 2});
}
