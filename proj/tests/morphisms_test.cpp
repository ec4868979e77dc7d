#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "trimorph/error.hpp"
#include "trimorph/morphisms.hpp"

using namespace trimorph;
using oracle::morphism;
using oracle::word;

TEST(Morphism, ParseRoundTrip) {
  const Morphism g = Morphism::parse(" a = aa , b = ab ");
  EXPECT_EQ(g.image_a, word("aa"));
  EXPECT_EQ(g.image_b, word("ab"));
  EXPECT_EQ(g.str(), "a=aa,b=ab");
  EXPECT_EQ(Morphism::parse(g.str()), g);
  EXPECT_EQ(Morphism::parse("a=eps,b=ab").str(), "a=eps,b=ab");
  EXPECT_EQ(Morphism::parse("b=ba,a=a"), morphism("a", "ba"));
}

TEST(Morphism, ParseErrors) {
  EXPECT_THROW(Morphism::parse("a=ca,b=b"), ParseError);
  EXPECT_THROW(Morphism::parse("a=a"), ParseError);
  EXPECT_THROW(Morphism::parse("a=a,a=b"), ParseError);
  EXPECT_THROW(Morphism::parse("a=a,b=b,"), ParseError);
  EXPECT_THROW(Morphism::parse("a=,b=b"), ParseError);
  EXPECT_THROW(Morphism::parse("c=a,b=b"), ParseError);
  try {
    Morphism::parse("a=a, b=bxb");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8U);  // offset in the original text
  }
}

TEST(Morphism, Apply) {
  EXPECT_EQ(apply(morphism("aa", "ab"), word("ba")), word("abaa"));
  EXPECT_EQ(apply(morphism("aa", "ab"), Word{}), Word{});
  EXPECT_EQ(apply(Morphism::identity(), word("abba")), word("abba"));
}

TEST(Morphism, ComposeOrder) {
  // g1∘g2 applies g2 first.
  const Morphism g1 = morphism("a", "bb");
  const Morphism g2 = morphism("aa", "b");
  EXPECT_EQ(compose(g1, g2), morphism("aa", "bb"));
  EXPECT_EQ(compose(g2, g1), morphism("aa", "bb"));

  const Morphism h1 = morphism("aa", "ab");
  const Morphism h2 = morphism("a", "ba");
  EXPECT_EQ(compose(h1, h2).image_b, word("abaa"));
  EXPECT_EQ(compose(h2, h1).image_b, word("aba"));
  EXPECT_EQ(compose(Morphism::identity(), h1), h1);
}

TEST(Morphism, Power) {
  const Morphism g = morphism("a", "bab");
  EXPECT_EQ(power(g, 2).image_b, word("bababab"));
  EXPECT_EQ(power(g, 0), Morphism::identity());
  EXPECT_EQ(power(g, 1), g);
  EXPECT_THROW(power(morphism("aa", "bb"), 64), CountOverflow);
}

TEST(Morphism, Matrix) {
  EXPECT_EQ(matrix(morphism("aa", "ab")).entries, (MorphMatrix{{{{2, 1}, {0, 1}}}}.entries));
  const MorphMatrix singular = matrix(morphism("", "ab"));
  EXPECT_EQ(singular.entries, (MorphMatrix{{{{0, 1}, {0, 1}}}}.entries));
  EXPECT_EQ(singular.determinant(), 0);
  EXPECT_EQ(matrix(Morphism::identity()).determinant(), 1);
  EXPECT_FALSE(matrix(morphism("ab", "b")).upper_triangular());
}

TEST(Morphism, DeterminantUses128Bits) {
  MorphMatrix m;
  m.entries = {{{~std::uint64_t{0}, 0}, {0, ~std::uint64_t{0}}}};
  const unsigned __int128 expected =
      static_cast<unsigned __int128>(~std::uint64_t{0}) * static_cast<unsigned __int128>(~std::uint64_t{0});
  EXPECT_NE(m.determinant(), 0);
  EXPECT_EQ(static_cast<unsigned __int128>(m.determinant()), expected);
}

TEST(Morphism, Nonsingular) {
  EXPECT_TRUE(is_nonsingular(morphism("a", "bb")));
  EXPECT_FALSE(is_nonsingular(morphism("aa", "aaa")));
  EXPECT_FALSE(is_nonsingular(morphism("", "ab")));
}

TEST(Triangular, Decompose) {
  const TriangularForm f = to_triangular(morphism("aa", "abaaba"));
  EXPECT_EQ(f.s, 2U);
  ASSERT_TRUE(f.has_core());
  EXPECT_EQ(f.core(), (Core{1, {2}, 1}));

  const TriangularForm g = to_triangular(morphism("", "aaa"));
  EXPECT_EQ(g.s, 0U);
  EXPECT_EQ(std::get<BOnly>(g.bpart).e, 3U);

  EXPECT_THROW(to_triangular(morphism("ab", "b")), NotUpperTriangular);

  EXPECT_EQ(to_triangular(morphism("a", "bbab")).core(), (Core{0, {0, 1}, 0}));
  EXPECT_EQ(to_triangular(morphism("a", "babba")).core(), (Core{0, {1, 0}, 1}));
  EXPECT_EQ(to_triangular(morphism("a", "b")).core(), (Core{0, {}, 0}));
}

TEST(Triangular, SpecialPair) {
  EXPECT_TRUE(is_special_pair(morphism("a", "aba"), morphism("aa", "b")));
  EXPECT_FALSE(is_special_pair(morphism("a", "aba"), morphism("a", "b")));
  EXPECT_FALSE(is_special_pair(morphism("a", "bab"), morphism("aa", "b")));
  EXPECT_THROW(is_special_pair(morphism("b", "b"), morphism("a", "b")), NotUpperTriangular);
}

TEST(MorphismProperty, AlgebraAgreesWithStringModel) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const Morphism g1 = oracle::random_triangular(rng);
    const Morphism g2 = oracle::random_triangular(rng);
    const auto s1 = oracle::from(g1);
    const auto s2 = oracle::from(g2);

    const Morphism c = compose(g1, g2);
    EXPECT_EQ(oracle::from(c), oracle::compose(s1, s2));
    EXPECT_EQ(matrix(c), matrix(g1) * matrix(g2));

    const std::string ws = oracle::random_word(rng, 20);
    EXPECT_EQ(apply(c, word(ws)), apply(g1, apply(g2, word(ws))));
    EXPECT_EQ(apply(g1, word(ws)), word(oracle::apply(s1, ws)));

    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n)
        EXPECT_EQ(power(g1, m + n), compose(power(g1, m), power(g1, n)));

    const TriangularForm f = to_triangular(g1);
    EXPECT_EQ(f.to_morphism(), g1);
    EXPECT_EQ(to_triangular(f.to_morphism()), f);

    if (f.nonsingular()) {
      const std::uint64_t p = f.b_count();
      std::uint64_t pn = 1;
      for (unsigned n = 0; n <= 4; ++n, pn *= p) EXPECT_EQ(power(g1, n).image_b.occ(Letter::B), pn);
      EXPECT_TRUE(is_nonsingular(g1));
    } else {
      EXPECT_FALSE(is_nonsingular(g1));
    }
  }
}
