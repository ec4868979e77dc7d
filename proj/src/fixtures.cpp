#include "trimorph/fixtures.hpp"

namespace trimorph {

std::vector<CommutingExample> commuting_examples() {
  auto m = [](const char* text) { return Morphism::parse(text); };
  const Morphism h = m("a=a,b=ba");
  return {
      {1, "letter-wise powers: x -> x^m_x and x -> x^n_x", m("a=aa,b=bbb"), m("a=aaa,b=bb")},
      {2, "a -> a, b -> b^2 against a -> a^2, b -> b", m("a=a,b=bb"), m("a=aa,b=b")},
      {3, "g_i(b) = (b a^alpha)^(p_i - 1) b with alpha = 2, p = 2, q = 3", m("a=a,b=baab"),
       m("a=a,b=baabaab")},
      {4, "common power: g1 = h^2, g2 = h^3 for h: a -> a, b -> ba", power(h, 2), power(h, 3)},
      {5, "a-conjugate images of b with g1(a) = g2(a) = a", m("a=a,b=abab"), m("a=a,b=baba")},
      {6, "g1(a) = g2(a) = eps, g1(b) = w^2, g2(b) = w^3 with w = a", m("a=eps,b=aa"),
       m("a=eps,b=aaa")},
      {7, "g1 = (eps, (a^alpha b a^beta)^i), g2 = (a, (b a^(alpha+beta))^j b), alpha = i = j = 1",
       m("a=eps,b=ab"), m("a=a,b=bab")},
  };
}

}  // namespace trimorph
