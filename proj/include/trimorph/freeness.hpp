#pragma once

#include <optional>
#include <string>

#include "trimorph/morphisms.hpp"

namespace trimorph {

/// Two distinct products of the generators that compose to the same morphism.
/// Sequences are over '1'/'2'; "12" means g1∘g2.
struct Relation {
  std::string left;
  std::string right;

  friend bool operator==(const Relation&, const Relation&) = default;
};

inline constexpr unsigned kDefaultRelationDepth = 6;

/// Composition of the generators named by `sequence` (nonempty, over '1'/'2').
Morphism compose_sequence(const Morphism& g1, const Morphism& g2, const std::string& sequence);

/// Breadth-first search over products of length 1..depth in (length, lexicographic)
/// order. Returns the first product equal to an earlier one, paired with that
/// earlier product. Throws SearchAborted when an image count overflows.
std::optional<Relation> find_relation(const Morphism& g1, const Morphism& g2,
                                      unsigned depth = kDefaultRelationDepth);

/// Both nonsingular upper triangular, distinct, and not a special pair.
bool binary_freeness_hypotheses(const Morphism& g1, const Morphism& g2);

/// Distinct upper triangular morphisms whose matrices have all diagonal entries >= 2.
bool diagonal_freeness_hypotheses(const Morphism& g1, const Morphism& g2);

}  // namespace trimorph
