#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "trimorph/classifier.hpp"
#include "trimorph/morphisms.hpp"

namespace trimorph {

/// Bounds of the exhaustive space of upper triangular morphisms.
///
/// image_a = a^s with s <= max_s; image_b is either a^e with e <= max_bonly_exp
/// or a^gamma1 b a^alpha_1 ... b a^gamma2 with 1 <= p <= max_p b's and every
/// exponent <= max_exp.
struct SweepConfig {
  unsigned max_s = 3;
  unsigned max_p = 3;
  unsigned max_exp = 2;
  unsigned max_bonly_exp = 3;
  unsigned workers = 1;
};

/// Deterministic enumeration: s ascending, then b-free images by exponent,
/// then core images by p and lexicographic (gamma1, alphas..., gamma2).
std::vector<Morphism> enumerate_morphisms(const SweepConfig& config);

inline constexpr std::size_t kCaseCount = std::size(kAllCases);
inline constexpr std::size_t kMaxConditions = 5;

struct SweepMismatch {
  std::uint64_t index;
  Morphism g1;
  Morphism g2;
  bool direct;
  CommutationReport report;
};

struct SweepSummary {
  std::uint64_t morphisms = 0;
  std::uint64_t pairs = 0;
  std::uint64_t commuting = 0;
  std::vector<SweepMismatch> mismatches;
  /// Pair indices whose evaluation overflowed.
  std::vector<std::uint64_t> aborted;
  std::array<std::uint64_t, kCaseCount> cases{};
  /// True-count per case per condition, in condition_names order.
  std::array<std::array<std::uint64_t, kMaxConditions>, kCaseCount> conditions{};
};

/// Classifies every ordered pair (including g with itself) and compares the
/// prediction to direct_commute. Pair index = i * N + j. Results do not
/// depend on config.workers.
SweepSummary run_sweep(const SweepConfig& config);

/// Runs body(i) for i in [0, n) split into contiguous blocks over `workers`
/// threads. body must only write state owned by index i.
template <typename Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
  workers = std::max(1U, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t block = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    if (begin >= end) break;
    threads.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace trimorph
