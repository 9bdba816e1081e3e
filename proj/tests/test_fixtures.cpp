#include "burau/fixtures.hpp"
#include "doctest.h"

using namespace burau;

TEST_CASE("affine A3 words") {
  auto f = affine_a3();
  CHECK(f.a == BraidWord{3, 3, 4, 3, 2, 1, -3, 4, 3, 2, -1, -1, 4});
  CHECK(f.b == BraidWord{1, 1, -2, 4, 1, -3, 2, -4, 3, 1, 4, 1, -2, -4, -4, 3});
  CHECK(f.a_vertex == 3);
  CHECK(f.b_vertex == 2);
  auto v = affine_a3_variant();
  CHECK(v.a == BraidWord{3, 1, 2, 1, -3, 4, 2, 3, 2, -3, -1, -1, 4});
  CHECK(v.b == BraidWord{1, -4, 1, 1, -3, -3, -2, 4, 1, -3, 2, -4, 3, 1, 4, 1, -2, -4, -4, 3});
  CHECK(affine_kernel_word(f) == commutator(conjugate(f.a, 3), conjugate(f.b, 2)));
}

TEST_CASE("embedded D4 words") {
  CHECK(d4_moduli() == std::vector<int>{6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  std::vector<std::size_t> lengths{78, 97, 100, 168, 119, 137, 78, 114, 354, 143, 206};
  auto moduli = d4_moduli();
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    BraidWord w = d4_word(moduli[k]);
    CAPTURE(moduli[k]);
    CHECK(w.size() == lengths[k]);
    CHECK_NOTHROW(validate_word(preset("D4"), w));
  }
  CHECK_THROWS_AS(d4_word(4), std::out_of_range);
  CHECK_THROWS_AS(d4_word(17), std::out_of_range);
}

TEST_CASE("embedded word checksum is frozen") {
  // FNV-1a of the data files, computed outside this code base.
  CHECK(d4_words_checksum() == 15663538294775941362ull);
}
