#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "trimorph/morphisms.hpp"
#include "trimorph/words.hpp"

namespace trimorph {

/// Ground truth: g1∘g2 == g2∘g1 letter by letter.
bool direct_commute(const Morphism& g1, const Morphism& g2);

/// u = a^p w a^q, v = a^r w a^s with p + q = r + s: equal b-cores and equal a-counts.
bool a_conjugates(const Word& u, const Word& v);

/// Which characterization applies to an upper triangular pair.
enum class Case : std::uint8_t {
  SingularBImage,   // some image of b lies in a^*
  SingularAImage,   // some image of a is empty, both images of b contain b
  BothGapOne,       // nonsingular, p = q = 1
  GapOneVsMany,     // nonsingular, p = 1 < q
  MultIndependent,  // nonsingular, p, q >= 2 multiplicatively independent
  MultDependent,    // nonsingular, p = r^m, q = r^n
};

inline constexpr Case kAllCases[] = {Case::SingularBImage, Case::SingularAImage, Case::BothGapOne,
                                     Case::GapOneVsMany,   Case::MultIndependent, Case::MultDependent};

std::string_view case_name(Case c) noexcept;

/// Names of the conditions reported for a case, in report order.
std::vector<std::string_view> condition_names(Case c);

struct Condition {
  std::string name;
  bool holds;

  friend bool operator==(const Condition&, const Condition&) = default;
};

using WitnessValue = std::variant<std::uint64_t, std::string>;

struct CommutationReport {
  Case kase;
  /// The inputs were exchanged so that the case's "g1" role is the second argument.
  bool swapped = false;
  std::vector<Condition> conditions;
  std::vector<std::pair<std::string, WitnessValue>> witness;
  bool prediction = false;

  std::optional<bool> condition(std::string_view name) const;
};

/// Decides commutation of two upper triangular morphisms from their
/// triangular forms alone, evaluating every condition of the matching case.
/// Throws NotUpperTriangular, or CountOverflow from the powers compared in
/// the dependent case.
CommutationReport classify(const Morphism& g1, const Morphism& g2);

}  // namespace trimorph
