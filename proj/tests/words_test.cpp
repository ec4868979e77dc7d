#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "trimorph/error.hpp"
#include "trimorph/words.hpp"

using namespace trimorph;
using oracle::word;

namespace {

constexpr int kIterations = 500;
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

}  // namespace

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(Word::parse("eps").str(), "eps");
  EXPECT_TRUE(Word::parse("eps").empty());
  EXPECT_EQ(Word::parse("abba").str(), "abba");
  EXPECT_THROW(Word::parse(""), ParseError);
  EXPECT_THROW(Word::parse("abc"), ParseError);
  try {
    Word::parse("abxb");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2U);
  }
}

TEST(Word, ConcatExamples) {
  EXPECT_EQ(concat(word("ab"), word("ba")), word("abba"));
  const Word aaa = concat(word("a"), word("aa"));
  ASSERT_EQ(aaa.runs().size(), 1U);
  EXPECT_EQ(aaa.runs()[0], (trimorph::Run{Letter::A, 3}));
  EXPECT_EQ(concat(Word{}, word("b")), word("b"));
}

TEST(Word, CountOverflowIsAnError) {
  Word w(Letter::A, kMax);
  EXPECT_THROW(w.append(Letter::A, 1), CountOverflow);
  EXPECT_EQ(w.length(), kMax);  // unchanged
  EXPECT_THROW(concat(w, word("b")), CountOverflow);
  EXPECT_THROW(Word(Letter::B, 2).repeated(kMax), CountOverflow);
}

TEST(Word, FromRunsNormalizes) {
  const std::vector<trimorph::Run> runs{{Letter::A, 2}, {Letter::A, 0}, {Letter::B, 0}, {Letter::A, 1}, {Letter::B, 3}};
  const Word w = Word::from_runs(runs);
  EXPECT_EQ(w.str(), "aaabbb");
  EXPECT_EQ(w.runs().size(), 2U);
}

TEST(Word, StripQuotient) {
  EXPECT_EQ(strip_quotient(word("ba"), word("baab")), word("ab"));
  EXPECT_EQ(strip_quotient(Word{}, word("ab")), word("ab"));
  EXPECT_THROW(strip_quotient(word("b"), word("ab")), NotAPrefix);
  EXPECT_THROW(strip_quotient(word("aab"), word("ab")), NotAPrefix);
  EXPECT_THROW(strip_quotient(word("abab"), word("ab")), NotAPrefix);
  EXPECT_EQ(strip_quotient(word("ab"), word("ab")), Word{});
}

TEST(Word, BCore) {
  EXPECT_EQ(b_core(word("aabaa")), (BCore{2, word("b"), 2}));
  EXPECT_EQ(b_core(word("babb")), (BCore{0, word("babb"), 0}));
  EXPECT_EQ(b_core(word("aaa")), (BCore{3, Word{}, 0}));
  EXPECT_EQ(b_core(Word{}), (BCore{0, Word{}, 0}));
}

TEST(Word, WordsCommute) {
  EXPECT_TRUE(words_commute(word("ab"), word("abab")));
  EXPECT_FALSE(words_commute(word("ab"), word("ba")));
  EXPECT_TRUE(words_commute(Word{}, word("b")));
}

TEST(Word, PrefixHelpers) {
  const Word w = word("aabbbab");
  EXPECT_EQ(w.prefix(3), word("aab"));
  EXPECT_EQ(w.prefix(100), w);
  EXPECT_EQ(w.prefix_through_b(2), word("aabb"));
  EXPECT_EQ(w.prefix_through_b(4), word("aabbbab"));
  EXPECT_EQ(w.prefix_through_b(0), Word{});
  EXPECT_TRUE(w.starts_with(word("aab")));
  EXPECT_FALSE(w.starts_with(word("ab")));
}

TEST(WordProperty, AgreesWithStringModel) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < kIterations; ++it) {
    const std::string us = oracle::random_word(rng, 12);
    const std::string vs = oracle::random_word(rng, 12);
    const Word u = word(us);
    const Word v = word(vs);
    const Word uv = concat(u, v);
    EXPECT_EQ(uv, word(us + vs));
    EXPECT_EQ(uv.length(), u.length() + v.length());
    EXPECT_EQ(uv.occ(Letter::A), u.occ(Letter::A) + v.occ(Letter::A));
    EXPECT_EQ(uv.occ(Letter::B), u.occ(Letter::B) + v.occ(Letter::B));
    EXPECT_EQ(strip_quotient(u, uv), v);
    EXPECT_EQ(words_commute(u, v), us + vs == vs + us);
    EXPECT_EQ(words_commute(u, v), words_commute(v, u));
    // Unique normal form: equality as words iff equality as strings.
    EXPECT_EQ(u == v, us == vs);
    for (std::uint64_t k = 0; k <= 5; ++k) EXPECT_TRUE(words_commute(u, u.repeated(k)));

    const BCore c = b_core(u);
    Word back(Letter::A, c.lead);
    back.append(c.core).append(Letter::A, c.trail);
    EXPECT_EQ(back, u);
  }
}
