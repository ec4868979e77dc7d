#pragma once

#include <string>
#include <vector>

#include "trimorph/morphisms.hpp"

namespace trimorph {

/// A concrete instance of one of the seven classic commuting-pair families.
struct CommutingExample {
  int number;
  std::string description;
  Morphism g1;
  Morphism g2;
};

/// Examples 1 through 7, in order.
std::vector<CommutingExample> commuting_examples();

}  // namespace trimorph
