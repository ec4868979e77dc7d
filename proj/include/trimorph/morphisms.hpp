#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trimorph/words.hpp"

namespace trimorph {

__extension__ using Int128 = __int128;

/// Endomorphism of {a,b}^*, fixed by the images of its two letters.
struct Morphism {
  Word image_a;
  Word image_b;

  static Morphism identity() { return {Word(Letter::A, 1), Word(Letter::B, 1)}; }

  const Word& image(Letter x) const noexcept { return x == Letter::A ? image_a : image_b; }

  /// "a=<word>,b=<word>" with "eps" for the empty word; whitespace ignored.
  static Morphism parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

Word apply(const Morphism& g, const Word& w);

/// g1 ∘ g2: g2 is applied first. This is the product written g1g2 in the
/// literature on morphism commutation, so compose(g1, g2)(b) = g1(g2(b)).
Morphism compose(const Morphism& g1, const Morphism& g2);

Morphism power(const Morphism& g, std::uint64_t n);

/// entries[i][j] = |image of letter j|_{letter i}, letters ordered a, b.
struct MorphMatrix {
  std::array<std::array<std::uint64_t, 2>, 2> entries{};

  std::uint64_t at(Letter row, Letter col) const noexcept {
    return entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  Int128 determinant() const noexcept {
    return static_cast<Int128>(entries[0][0]) * static_cast<Int128>(entries[1][1]) -
           static_cast<Int128>(entries[0][1]) * static_cast<Int128>(entries[1][0]);
  }
  bool upper_triangular() const noexcept { return entries[1][0] == 0; }

  friend bool operator==(const MorphMatrix&, const MorphMatrix&) = default;
};

/// Checked product.
MorphMatrix operator*(const MorphMatrix& x, const MorphMatrix& y);

MorphMatrix matrix(const Morphism& g);

bool is_upper_triangular(const Morphism& g) noexcept;
bool is_nonsingular(const Morphism& g) noexcept;

/// image_b = a^e.
struct BOnly {
  std::uint64_t e = 0;
  friend bool operator==(const BOnly&, const BOnly&) = default;
};

/// image_b = a^gamma1 b a^alphas[0] b ... b a^alphas[p-2] b a^gamma2, p = alphas.size() + 1.
struct Core {
  std::uint64_t gamma1 = 0;
  std::vector<std::uint64_t> alphas;
  std::uint64_t gamma2 = 0;

  std::uint64_t b_count() const noexcept { return alphas.size() + 1; }
  /// alpha_d for 1 <= d <= p-1.
  std::uint64_t alpha(std::uint64_t d) const { return alphas.at(d - 1); }

  friend bool operator==(const Core&, const Core&) = default;
};

/// Canonical decomposition of an upper triangular morphism: image_a = a^s.
struct TriangularForm {
  std::uint64_t s = 0;
  std::variant<BOnly, Core> bpart;

  bool has_core() const noexcept { return std::holds_alternative<Core>(bpart); }
  /// Throws std::bad_variant_access for BOnly forms.
  const Core& core() const { return std::get<Core>(bpart); }
  /// |image_b|_b; 0 for BOnly.
  std::uint64_t b_count() const noexcept { return has_core() ? core().b_count() : 0; }
  bool nonsingular() const noexcept { return s >= 1 && has_core(); }

  Morphism to_morphism() const;

  friend bool operator==(const TriangularForm&, const TriangularForm&) = default;
};

/// Throws NotUpperTriangular when image_a contains b.
TriangularForm to_triangular(const Morphism& g);

/// Both b-images in a^*ba^* and exactly one a-image equal to `a`.
/// Throws NotUpperTriangular.
bool is_special_pair(const Morphism& g1, const Morphism& g2);

}  // namespace trimorph
