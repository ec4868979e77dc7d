#include <gtest/gtest.h>

#include <set>

#include "trimorph/json.hpp"
#include "trimorph/sweep.hpp"

using namespace trimorph;

TEST(Enumerate, DefaultCounts) {
  const std::vector<Morphism> ms = enumerate_morphisms(SweepConfig{});
  // image_b: 4 b-free + 9 (p=1) + 27 (p=2) + 81 (p=3) = 121; times 4 choices of s.
  EXPECT_EQ(ms.size(), 484U);
  const std::set<Morphism> unique(ms.begin(), ms.end());
  EXPECT_EQ(unique.size(), ms.size());
  for (const Morphism& g : ms) EXPECT_TRUE(is_upper_triangular(g));
  EXPECT_EQ(ms.front().str(), "a=eps,b=eps");
  EXPECT_EQ(ms[4].str(), "a=eps,b=b");
  EXPECT_EQ(ms[5].str(), "a=eps,b=ba");
}

TEST(Sweep, SmallSpaceHasNoMismatches) {
  SweepConfig config{.max_s = 2, .max_p = 2, .max_exp = 1, .max_bonly_exp = 2, .workers = 1};
  const SweepSummary s = run_sweep(config);
  EXPECT_EQ(s.pairs, s.morphisms * s.morphisms);
  EXPECT_TRUE(s.mismatches.empty());
  EXPECT_TRUE(s.aborted.empty());
  std::uint64_t total = 0;
  for (std::uint64_t c : s.cases) total += c;
  EXPECT_EQ(total, s.pairs);
}

TEST(Sweep, IndependentOfWorkerCount) {
  SweepConfig one{.max_s = 2, .max_p = 3, .max_exp = 1, .max_bonly_exp = 2, .workers = 1};
  SweepConfig many = one;
  many.workers = 7;
  const std::string a = sweep_summary_json(one, run_sweep(one)).dump();
  const std::string b = sweep_summary_json(many, run_sweep(many)).dump();
  EXPECT_EQ(a, b);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<int> hits(1001, 0);
  parallel_for(hits.size(), 6, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) EXPECT_EQ(h, 1);
}
