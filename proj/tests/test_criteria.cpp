#include "burau/criteria.hpp"
#include "burau/fixtures.hpp"
#include "doctest.h"

using namespace burau;

TEST_CASE("affine A3 witnesses give a commutator certificate") {
  auto g = preset("tildeA3");
  auto f = affine_a3();
  CriterionResult r = criterion1(g, {f.a, f.a_vertex}, {f.b, f.b_vertex});
  REQUIRE(r.accepted());
  const KernelCertificate& c = *r.certificate;
  CHECK(c.verified);
  CHECK(c.pairing->is_zero());
  REQUIRE(c.hom);
  CHECK_FALSE(c.hom->empty());
  CHECK(c.kernel_word == affine_kernel_word(f));
  CHECK(verify_kernel_word(c));

  auto j = c.to_json();
  CHECK(j["criterion"] == "commutator");
  CHECK(j["verified"] == true);
  CHECK(j["ring"] == "Z");
  CHECK(j["form"] == "standard");
  CHECK(j["kernel_word"].size() == c.kernel_word.size());

  KernelCertificate tampered = c;
  tampered.kernel_word.push_back(1);
  CHECK_FALSE(verify_kernel_word(tampered));

  auto v = affine_a3_variant();
  CHECK(criterion1(g, {v.a, v.a_vertex}, {v.b, v.b_vertex}).accepted());
}

TEST_CASE("criterion rejections") {
  auto a3 = preset("A3");
  auto nonzero = criterion1(a3, {{}, 1}, {{}, 2});
  CHECK_FALSE(nonzero.accepted());
  CHECK_FALSE(nonzero.rejection.empty());

  // Commuting generators: pairing 0 but no morphisms, the commutator is trivial.
  auto no_hom = criterion1(a3, {{}, 1}, {{}, 3});
  CHECK_FALSE(no_hom.accepted());

  // Adjacent generators: pairing q, but Hom is one-dimensional.
  auto small = criterion2(a3, {{}, 1}, {{}, 2});
  CHECK_FALSE(small.accepted());

  CHECK_THROWS_AS(criterion1(a3, {{4}, 1}, {{}, 2}), ValidationError);
  CHECK_THROWS(criterion1(a3, {{}, 5}, {{}, 2}));
}

TEST_CASE("verify_kernel_word") {
  KernelCertificate c;
  c.graph = preset("A2");
  CHECK_FALSE(verify_kernel_word(c));
  c.kernel_word = {1};
  CHECK_FALSE(verify_kernel_word(c));
  c.kernel_word = {1, -1};
  CHECK(verify_kernel_word(c));
  CHECK(criterion_name(Criterion::TwistQuotient) == "twist-quotient");
  CHECK(criterion_name(Criterion::BraidRelator) == "braid-relator");
}
