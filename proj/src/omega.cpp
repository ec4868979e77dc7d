#include "trimorph/omega.hpp"

#include <algorithm>
#include <string>

#include "trimorph/checked.hpp"
#include "trimorph/error.hpp"
#include "trimorph/numtheory.hpp"

namespace trimorph {

namespace {

void require_nonsingular(const TriangularForm& h, const char* op) {
  if (!h.nonsingular())
    throw NotApplicable(std::string(op) + " needs a nonsingular form (s >= 1 and b in image of b)");
}

void require_many_b(const TriangularForm& h, const char* op) {
  require_nonsingular(h, op);
  if (h.b_count() < 2) throw NotApplicable(std::string(op) + " needs at least two b's in the image of b");
}

// Appends b·v·h(v)·h²(v)·... to `out` until done(out) holds. `trim` keeps the
// working power bounded: h of a prefix is a prefix of h of the word.
template <typename Done, typename Trim>
Word expand_omega(const TriangularForm& h, Done done, Trim trim) {
  const Word tail = right_tail(h);
  if (tail.empty()) throw OmegaUndefined("omega(h) undefined: image of b is a^gamma1 b");
  const Morphism g = h.to_morphism();
  Word out(Letter::B, 1);
  Word cur = tail;
  while (!done(out)) {
    out.append(cur);
    if (done(out)) break;
    cur = apply(g, trim(cur));
  }
  return out;
}

}  // namespace

Word right_tail(const TriangularForm& h) {
  require_nonsingular(h, "right_tail");
  const Core& c = h.core();
  Word v;
  for (std::uint64_t alpha : c.alphas) v.append(Letter::A, alpha).append(Letter::B, 1);
  v.append(Letter::A, c.gamma2);
  return v;
}

Word omega_prefix(const TriangularForm& h, std::uint64_t n) {
  Word out = expand_omega(
      h, [n](const Word& w) { return w.length() >= n; },
      [n](const Word& w) { return w.prefix(n); });
  return out.prefix(n);
}

Word omega_prefix_b(const TriangularForm& h, std::uint64_t count) {
  require_many_b(h, "omega_prefix_b");
  Word out = expand_omega(
      h, [count](const Word& w) { return w.occ(Letter::B) >= count; },
      [count](const Word& w) { return w.prefix_through_b(count); });
  return out.prefix_through_b(count);
}

std::uint64_t gap(const TriangularForm& h, std::uint64_t i) {
  require_many_b(h, "gap");
  if (i == 0) throw NotApplicable("gap index starts at 1");
  const Core& c = h.core();
  const auto [m, d] = val_and_digit(i, c.b_count());
  const std::uint64_t outer = checked_add(c.gamma1, c.gamma2);
  const std::uint64_t geometric =
      h.s == 1 ? m : (checked_pow(h.s, m) - 1) / (h.s - 1);
  return checked_add(checked_mul(c.alpha(d), checked_pow(h.s, m)), checked_mul(outer, geometric));
}

std::vector<std::uint64_t> gaps_direct(const TriangularForm& h, std::uint64_t upto) {
  require_many_b(h, "gaps_direct");
  const Word w = omega_prefix_b(h, checked_add(upto, 1));
  std::vector<std::uint64_t> gaps;
  gaps.reserve(static_cast<std::size_t>(upto));
  for (const Run& r : w.runs()) {
    if (gaps.size() >= upto) break;
    if (r.letter == Letter::B) {
      // A run of k b's: the first closes the pending gap (already pushed),
      // the remaining k-1 each follow a zero gap.
      for (std::uint64_t k = 1; k < r.count && gaps.size() < upto; ++k) gaps.push_back(0);
    } else {
      gaps.push_back(r.count);
    }
  }
  return gaps;
}

std::uint64_t gap_direct(const TriangularForm& h, std::uint64_t i) {
  if (i == 0) throw NotApplicable("gap index starts at 1");
  return gaps_direct(h, i).at(static_cast<std::size_t>(i - 1));
}

bool omega_eventually_periodic(const TriangularForm& h) {
  require_many_b(h, "omega_eventually_periodic");
  const Core& c = h.core();
  const std::uint64_t alpha = c.alphas.front();
  // With alpha > 0 and s >= 2, A(p^m) = alpha * s^m is unbounded.
  return c.gamma1 == 0 && c.gamma2 == 0 && (h.s == 1 || alpha == 0) &&
         std::all_of(c.alphas.begin(), c.alphas.end(), [alpha](std::uint64_t x) { return x == alpha; });
}

}  // namespace trimorph
