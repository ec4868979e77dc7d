#pragma once

#include <cstdint>
#include <vector>

#include "trimorph/morphisms.hpp"
#include "trimorph/words.hpp"

namespace trimorph {

// Infinite words generated by nonsingular upper triangular morphisms.
//
// For h(b) = a^gamma1 · b · v, extend h to a fresh letter c by c -> c·v.
// Iterating on c gives c·v·h(v)·h²(v)·..., so the infinite word
//
//     omega(h) = b · v · h(v) · h²(v) · ...
//
// is computed directly without materializing the third letter. It equals the
// limit of h^k(b) with the leading a's removed, and is defined iff v != eps.

/// v with image_b = a^gamma1 · b · v. Throws NotApplicable for singular forms.
Word right_tail(const TriangularForm& h);

/// Length-n prefix of omega(h). Throws OmegaUndefined when the tail is empty.
Word omega_prefix(const TriangularForm& h, std::uint64_t n);

/// Shortest prefix of omega(h) with `count` occurrences of b.
/// Throws NotApplicable unless p >= 2 (otherwise b occurs once).
Word omega_prefix_b(const TriangularForm& h, std::uint64_t count);

/// Gap sequence A(i): a's between the i-th and (i+1)-th b of omega(h).
///
/// Closed form alpha_d · s^m + (gamma1 + gamma2) · (1 + s + ... + s^(m-1)),
/// with m the p-adic valuation of i and d its lowest nonzero base-p digit.
/// Needs s >= 1 and p >= 2, else NotApplicable.
std::uint64_t gap(const TriangularForm& h, std::uint64_t i);

/// A(i) by literal expansion of omega(h); independent of gap().
std::uint64_t gap_direct(const TriangularForm& h, std::uint64_t i);

/// A(1), ..., A(upto) from one expansion of omega(h).
std::vector<std::uint64_t> gaps_direct(const TriangularForm& h, std::uint64_t upto);

/// omega(h) is eventually periodic iff gamma1 = gamma2 = 0, all alphas equal
/// some alpha, and s = 1 or alpha = 0; then omega(h) = (b a^alpha)^omega.
/// Needs s >= 1, p >= 2.
bool omega_eventually_periodic(const TriangularForm& h);

}  // namespace trimorph
