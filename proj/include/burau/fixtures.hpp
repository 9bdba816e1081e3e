#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burau/coxeter.hpp"

namespace burau {

/// A pair of witness words on the affine A3 graph.
struct AffineFixture {
  std::string name;
  BraidWord a;
  int a_vertex = 3;
  BraidWord b;
  int b_vertex = 2;
};

AffineFixture affine_a3();
/// The words as first produced by the original search.
AffineFixture affine_a3_variant();
/// [a s3 a^{-1}, b s2 b^{-1}]
BraidWord affine_kernel_word(const AffineFixture& f);

/// Moduli with an embedded D4 word, ascending (6..16).
std::vector<int> d4_moduli();
/// Throws std::out_of_range when there is no word for p.
BraidWord d4_word(int p);
/// FNV-1a over "p:word;" for every embedded list, in modulus order.
std::uint64_t d4_words_checksum();

}  // namespace burau
