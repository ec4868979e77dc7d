#include "trimorph/sweep.hpp"

#include "trimorph/error.hpp"

namespace trimorph {

std::vector<Morphism> enumerate_morphisms(const SweepConfig& config) {
  std::vector<Word> b_images;
  for (unsigned e = 0; e <= config.max_bonly_exp; ++e) b_images.emplace_back(Letter::A, e);
  for (unsigned p = 1; p <= config.max_p; ++p) {
    // Odometer over gamma1, alpha_1..alpha_{p-1}, gamma2; the first digit is most significant.
    std::vector<unsigned> digits(p + 1, 0);
    while (true) {
      TriangularForm form{0, Core{digits.front(), {digits.begin() + 1, digits.end() - 1}, digits.back()}};
      b_images.push_back(form.to_morphism().image_b);
      std::size_t k = digits.size();
      while (k > 0 && digits[k - 1] == config.max_exp) digits[--k] = 0;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  std::vector<Morphism> out;
  out.reserve((config.max_s + 1) * b_images.size());
  for (unsigned s = 0; s <= config.max_s; ++s)
    for (const Word& ib : b_images) out.push_back({Word(Letter::A, s), ib});
  return out;
}

namespace {

struct Outcome {
  std::uint8_t kase = 0;
  std::uint8_t conditions = 0;  // bit k = k-th condition holds
  bool prediction = false;
  bool direct = false;
  bool aborted = false;
};

}  // namespace

SweepSummary run_sweep(const SweepConfig& config) {
  const std::vector<Morphism> ms = enumerate_morphisms(config);
  const std::size_t n = ms.size();
  std::vector<Outcome> outcomes(n * n);

  parallel_for(outcomes.size(), config.workers, [&](std::size_t idx) {
    const Morphism& g1 = ms[idx / n];
    const Morphism& g2 = ms[idx % n];
    Outcome& o = outcomes[idx];
    try {
      const CommutationReport r = classify(g1, g2);
      o.kase = static_cast<std::uint8_t>(r.kase);
      for (std::size_t k = 0; k < r.conditions.size(); ++k)
        if (r.conditions[k].holds) o.conditions |= static_cast<std::uint8_t>(1U << k);
      o.prediction = r.prediction;
      o.direct = direct_commute(g1, g2);
    } catch (const CountOverflow&) {
      o.aborted = true;
    }
  });

  SweepSummary summary;
  summary.morphisms = n;
  summary.pairs = outcomes.size();
  for (std::size_t idx = 0; idx < outcomes.size(); ++idx) {
    const Outcome& o = outcomes[idx];
    if (o.aborted) {
      summary.aborted.push_back(idx);
      continue;
    }
    summary.commuting += o.direct ? 1 : 0;
    ++summary.cases[o.kase];
    for (std::size_t k = 0; k < kMaxConditions; ++k)
      if (o.conditions & (1U << k)) ++summary.conditions[o.kase][k];
    if (o.prediction != o.direct) {
      const Morphism& g1 = ms[idx / n];
      const Morphism& g2 = ms[idx % n];
      summary.mismatches.push_back({idx, g1, g2, o.direct, classify(g1, g2)});
    }
  }
  return summary;
}

}  // namespace trimorph
