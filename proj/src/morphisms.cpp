#include "trimorph/morphisms.hpp"

#include <cctype>
#include <optional>

#include "trimorph/checked.hpp"
#include "trimorph/error.hpp"

namespace trimorph {

namespace {

Word a_power(std::uint64_t n) { return Word(Letter::A, n); }

bool is_single_b_with_a_padding(const Word& w) { return w.occ(Letter::B) == 1; }

}  // namespace

Morphism Morphism::parse(std::string_view text) {
  // Strip whitespace but remember original offsets for error positions.
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact.push_back(text[i]);
    origin.push_back(i);
  }
  auto pos = [&](std::size_t k) { return k < origin.size() ? origin[k] : text.size(); };

  std::optional<Word> images[2];
  std::size_t k = 0;
  for (int clause = 0; clause < 2; ++clause) {
    if (clause == 1) {
      if (k >= compact.size() || compact[k] != ',') throw ParseError(pos(k), "expected ','");
      ++k;
    }
    if (k >= compact.size() || (compact[k] != 'a' && compact[k] != 'b'))
      throw ParseError(pos(k), "expected 'a=' or 'b='");
    const std::size_t slot = compact[k] == 'a' ? 0 : 1;
    if (images[slot]) throw ParseError(pos(k), std::string("duplicate image for '") + compact[k] + "'");
    ++k;
    if (k >= compact.size() || compact[k] != '=') throw ParseError(pos(k), "expected '='");
    ++k;
    const std::size_t start = k;
    while (k < compact.size() && compact[k] != ',') ++k;
    try {
      images[slot] = Word::parse(std::string_view(compact).substr(start, k - start));
    } catch (const ParseError& e) {
      throw ParseError(pos(start + e.position()), e.message());
    }
  }
  if (k != compact.size()) throw ParseError(pos(k), "trailing input");
  return {*images[0], *images[1]};
}

std::string Morphism::str() const { return "a=" + image_a.str() + ",b=" + image_b.str(); }

Word apply(const Morphism& g, const Word& w) {
  Word out;
  for (const Run& r : w.runs()) {
    const Word& img = g.image(r.letter);
    if (img.runs().size() == 1) {
      const Run& only = img.runs().front();
      out.append(only.letter, checked_mul(only.count, r.count));
    } else if (!img.empty()) {
      checked_mul(img.length(), r.count);
      for (std::uint64_t i = 0; i < r.count; ++i) out.append(img);
    }
  }
  return out;
}

Morphism compose(const Morphism& g1, const Morphism& g2) {
  return {apply(g1, g2.image_a), apply(g1, g2.image_b)};
}

Morphism power(const Morphism& g, std::uint64_t n) {
  Morphism result = Morphism::identity();
  Morphism base = g;
  while (n > 0) {
    if (n & 1U) result = compose(result, base);
    n >>= 1U;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

MorphMatrix operator*(const MorphMatrix& x, const MorphMatrix& y) {
  MorphMatrix z;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      z.entries[i][j] = checked_add(checked_mul(x.entries[i][0], y.entries[0][j]),
                                    checked_mul(x.entries[i][1], y.entries[1][j]));
  return z;
}

MorphMatrix matrix(const Morphism& g) {
  MorphMatrix m;
  for (Letter col : {Letter::A, Letter::B})
    for (Letter row : {Letter::A, Letter::B})
      m.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = g.image(col).occ(row);
  return m;
}

bool is_upper_triangular(const Morphism& g) noexcept { return g.image_a.in_star(Letter::A); }

bool is_nonsingular(const Morphism& g) noexcept { return matrix(g).determinant() != 0; }

Morphism TriangularForm::to_morphism() const {
  Morphism g{a_power(s), Word{}};
  if (const auto* only = std::get_if<BOnly>(&bpart)) {
    g.image_b = a_power(only->e);
    return g;
  }
  const Core& c = core();
  g.image_b.append(Letter::A, c.gamma1).append(Letter::B, 1);
  for (std::uint64_t alpha : c.alphas) g.image_b.append(Letter::A, alpha).append(Letter::B, 1);
  g.image_b.append(Letter::A, c.gamma2);
  return g;
}

TriangularForm to_triangular(const Morphism& g) {
  if (!is_upper_triangular(g)) throw NotUpperTriangular("image of a contains b: " + g.str());
  TriangularForm form;
  form.s = g.image_a.length();
  const Word& ib = g.image_b;
  if (ib.occ(Letter::B) == 0) {
    form.bpart = BOnly{ib.length()};
    return form;
  }
  Core c;
  auto runs = ib.runs();
  std::size_t i = 0;
  if (runs[i].letter == Letter::A) c.gamma1 = runs[i++].count;
  bool first_b_seen = false;
  for (; i < runs.size(); ++i) {
    const Run& r = runs[i];
    if (r.letter == Letter::B) {
      // Each b after the first closes a gap; consecutive b's give zero gaps.
      const std::uint64_t zero_gaps = first_b_seen ? r.count : r.count - 1;
      c.alphas.insert(c.alphas.end(), zero_gaps, 0);
      first_b_seen = true;
    } else if (i + 1 == runs.size()) {
      c.gamma2 = r.count;
    } else {
      // An inner a-run followed by a b-run: the next b closes this gap.
      c.alphas.push_back(r.count);
      const std::uint64_t extra = runs[i + 1].count - 1;
      c.alphas.insert(c.alphas.end(), extra, 0);
      ++i;
    }
  }
  form.bpart = std::move(c);
  return form;
}

bool is_special_pair(const Morphism& g1, const Morphism& g2) {
  if (!is_upper_triangular(g1)) throw NotUpperTriangular("image of a contains b: " + g1.str());
  if (!is_upper_triangular(g2)) throw NotUpperTriangular("image of a contains b: " + g2.str());
  const Word a(Letter::A, 1);
  return is_single_b_with_a_padding(g1.image_b) && is_single_b_with_a_padding(g2.image_b) &&
         ((g1.image_a == a) != (g2.image_a == a));
}

}  // namespace trimorph
