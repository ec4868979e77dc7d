#include "trimorph/freeness.hpp"

#include <map>
#include <utility>
#include <vector>

#include "trimorph/error.hpp"

namespace trimorph {

Morphism compose_sequence(const Morphism& g1, const Morphism& g2, const std::string& sequence) {
  if (sequence.empty()) throw NotApplicable("empty generator sequence");
  Morphism out = Morphism::identity();
  for (char k : sequence) {
    if (k != '1' && k != '2') throw NotApplicable("generator index must be 1 or 2");
    out = compose(out, k == '1' ? g1 : g2);
  }
  return out;
}

std::optional<Relation> find_relation(const Morphism& g1, const Morphism& g2, unsigned depth) {
  std::map<Morphism, std::string> seen;
  std::vector<std::pair<std::string, Morphism>> frontier{{"", Morphism::identity()}};
  for (unsigned level = 1; level <= depth; ++level) {
    std::vector<std::pair<std::string, Morphism>> next;
    next.reserve(frontier.size() * 2);
    for (const auto& [seq, m] : frontier) {
      for (char k : {'1', '2'}) {
        std::string extended = seq + k;
        Morphism product;
        try {
          product = compose(m, k == '1' ? g1 : g2);
        } catch (const CountOverflow& e) {
          throw SearchAborted(level, e.what());
        }
        auto [it, inserted] = seen.emplace(product, extended);
        if (!inserted) return Relation{it->second, std::move(extended)};
        next.emplace_back(std::move(extended), std::move(product));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

bool binary_freeness_hypotheses(const Morphism& g1, const Morphism& g2) {
  return is_upper_triangular(g1) && is_upper_triangular(g2) && is_nonsingular(g1) &&
         is_nonsingular(g2) && g1 != g2 && !is_special_pair(g1, g2);
}

bool diagonal_freeness_hypotheses(const Morphism& g1, const Morphism& g2) {
  if (!is_upper_triangular(g1) || !is_upper_triangular(g2) || g1 == g2) return false;
  const MorphMatrix m1 = matrix(g1);
  const MorphMatrix m2 = matrix(g2);
  return m1.entries[0][0] >= 2 && m1.entries[1][1] >= 2 && m2.entries[0][0] >= 2 &&
         m2.entries[1][1] >= 2;
}

}  // namespace trimorph
