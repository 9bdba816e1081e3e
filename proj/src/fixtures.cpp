#include "burau/fixtures.hpp"

#include <stdexcept>
#include <string_view>
#include <utility>

namespace burau {
namespace detail {
const std::vector<std::pair<int, std::string_view>>& d4_word_sources();
}

AffineFixture affine_a3() {
  return {"affine-a3",
          {3, 3, 4, 3, 2, 1, -3, 4, 3, 2, -1, -1, 4},
          3,
          {1, 1, -2, 4, 1, -3, 2, -4, 3, 1, 4, 1, -2, -4, -4, 3},
          2};
}

AffineFixture affine_a3_variant() {
  return {"affine-a3-variant",
          {3, 1, 2, 1, -3, 4, 2, 3, 2, -3, -1, -1, 4},
          3,
          {1, -4, 1, 1, -3, -3, -2, 4, 1, -3, 2, -4, 3, 1, 4, 1, -2, -4, -4, 3},
          2};
}

BraidWord affine_kernel_word(const AffineFixture& f) {
  return commutator(conjugate(f.a, f.a_vertex), conjugate(f.b, f.b_vertex));
}

std::vector<int> d4_moduli() {
  std::vector<int> out;
  for (const auto& [p, text] : detail::d4_word_sources()) out.push_back(p);
  return out;
}

BraidWord d4_word(int p) {
  for (const auto& [modulus, text] : detail::d4_word_sources()) {
    if (modulus == p) return parse_word(text);
  }
  throw std::out_of_range("no D4 fixture for p = " + std::to_string(p));
}

std::uint64_t d4_words_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [p, text] : detail::d4_word_sources()) {
    feed(std::to_string(p));
    feed(":");
    feed(format_word(parse_word(text)));
    feed(";");
  }
  return h;
}

}  // namespace burau
