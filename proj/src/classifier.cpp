#include "trimorph/classifier.hpp"

#include <algorithm>

#include "trimorph/checked.hpp"
#include "trimorph/error.hpp"
#include "trimorph/numtheory.hpp"

namespace trimorph {

bool direct_commute(const Morphism& g1, const Morphism& g2) {
  return compose(g1, g2) == compose(g2, g1);
}

bool a_conjugates(const Word& u, const Word& v) {
  const BCore cu = b_core(u);
  const BCore cv = b_core(v);
  if (u.occ(Letter::B) == 0 && v.occ(Letter::B) == 0) return u.length() == v.length();
  return cu.core == cv.core && u.occ(Letter::A) == v.occ(Letter::A);
}

std::string_view case_name(Case c) noexcept {
  switch (c) {
    case Case::SingularBImage: return "SingularBImage";
    case Case::SingularAImage: return "SingularAImage";
    case Case::BothGapOne: return "BothGapOne";
    case Case::GapOneVsMany: return "GapOneVsMany";
    case Case::MultIndependent: return "MultIndependent";
    case Case::MultDependent: return "MultDependent";
  }
  return "?";
}

std::vector<std::string_view> condition_names(Case c) {
  switch (c) {
    case Case::SingularBImage: return {"length_identity"};
    case Case::SingularAImage: return {"i", "ii", "iii", "iv", "v"};
    case Case::BothGapOne: return {"offset_identity"};
    case Case::GapOneVsMany: return {"i", "ii"};
    case Case::MultIndependent: return {"i", "ii"};
    case Case::MultDependent: return {"i", "ii", "iii"};
  }
  return {};
}

std::optional<bool> CommutationReport::condition(std::string_view name) const {
  for (const Condition& c : conditions)
    if (c.name == name) return c.holds;
  return std::nullopt;
}

namespace {

const Word kA(Letter::A, 1);

bool all_equal_to(const std::vector<std::uint64_t>& xs, std::uint64_t value) {
  return std::all_of(xs.begin(), xs.end(), [value](std::uint64_t x) { return x == value; });
}

// (b a^alpha)^(p-1) b
bool is_periodic_b_block(const Core& c, std::uint64_t alpha) {
  return c.gamma1 == 0 && c.gamma2 == 0 && all_equal_to(c.alphas, alpha);
}

struct Builder {
  CommutationReport report;

  Builder(Case kase, bool swapped) {
    report.kase = kase;
    report.swapped = swapped;
  }

  void add(std::string name, bool holds) { report.conditions.push_back({std::move(name), holds}); }
  void witness(std::string key, WitnessValue value) {
    report.witness.emplace_back(std::move(key), std::move(value));
  }
  CommutationReport finish() {
    report.prediction = std::any_of(report.conditions.begin(), report.conditions.end(),
                                    [](const Condition& c) { return c.holds; });
    return std::move(report);
  }
};

// g1(b) in a^*: both compositions send b into a^*, so only the lengths matter.
CommutationReport singular_b_image(const Morphism& g1, const Morphism& g2, bool swapped) {
  Builder out(Case::SingularBImage, swapped);
  const std::uint64_t left =
      checked_add(checked_mul(g1.image_a.length(), g2.image_b.occ(Letter::A)),
                  checked_mul(g1.image_b.length(), g2.image_b.occ(Letter::B)));
  const std::uint64_t right = checked_mul(g2.image_a.length(), g1.image_b.length());
  out.witness("g1g2_b_length", left);
  out.witness("g2g1_b_length", right);
  out.add("length_identity", left == right);
  return out.finish();
}

// g1(a) = eps; both b-images contain b.
CommutationReport singular_a_image(const Morphism& g1, const Morphism& g2, bool swapped) {
  Builder out(Case::SingularAImage, swapped);
  const Word& u = g1.image_b;
  const Word& v = g2.image_b;
  const std::uint64_t t = g2.image_a.length();
  out.witness("t", t);

  bool structural = false;
  if (t == 1) {
    // u = (a^alpha b a^beta)^i forces alpha = gamma1, beta = gamma2 and every
    // inner gap equal to alpha + beta; v must then be (b a^(alpha+beta))^j b.
    const Core cu = to_triangular(g1).core();
    const Core cv = to_triangular(g2).core();
    const std::uint64_t alpha = cu.gamma1;
    const std::uint64_t beta = cu.gamma2;
    const std::uint64_t period = checked_add(alpha, beta);
    if (all_equal_to(cu.alphas, period) && is_periodic_b_block(cv, period)) {
      structural = true;
      out.witness("alpha", alpha);
      out.witness("beta", beta);
      out.witness("i", u.occ(Letter::B));
      out.witness("j", v.occ(Letter::B) - 1);
    }
  }

  out.add("i", g1 == g2);
  out.add("ii", g2 == Morphism::identity());
  out.add("iii", t == 0 && words_commute(u, v));
  out.add("iv", u.in_star(Letter::B) && v.in_star(Letter::B));
  out.add("v", structural);
  return out.finish();
}

// Both nonsingular with p = q = 1: compare the a-offsets on each side of b.
CommutationReport both_gap_one(const TriangularForm& f1, const TriangularForm& f2, bool swapped) {
  Builder out(Case::BothGapOne, swapped);
  const Core& c1 = f1.core();
  const Core& c2 = f2.core();
  const std::uint64_t s1 = f1.s - 1;
  const std::uint64_t t1 = f2.s - 1;
  const bool left = checked_mul(s1, c2.gamma1) == checked_mul(t1, c1.gamma1);
  const bool right = checked_mul(s1, c2.gamma2) == checked_mul(t1, c1.gamma2);
  out.add("offset_identity", left && right);
  return out.finish();
}

CommutationReport gap_one_vs_many(const Morphism& g1, const Morphism& g2, bool swapped) {
  Builder out(Case::GapOneVsMany, swapped);
  out.add("i", g1 == Morphism::identity());
  out.add("ii", g1.image_b == Word(Letter::B, 1) && g2.image_b.in_star(Letter::B));
  return out.finish();
}

CommutationReport mult_independent(const TriangularForm& f1, const TriangularForm& f2,
                                   const Morphism& g1, const Morphism& g2, bool swapped) {
  Builder out(Case::MultIndependent, swapped);
  const Core& c1 = f1.core();
  const Core& c2 = f2.core();
  const std::uint64_t alpha = c1.alphas.front();
  out.witness("alpha", alpha);
  out.add("i", g1.image_b.in_star(Letter::B) && g2.image_b.in_star(Letter::B));
  out.add("ii", f1.s == 1 && f2.s == 1 && is_periodic_b_block(c1, alpha) &&
                    is_periodic_b_block(c2, alpha));
  return out.finish();
}

CommutationReport mult_dependent(const Morphism& g1, const Morphism& g2, const Dependent& dep,
                                 bool swapped) {
  Builder out(Case::MultDependent, swapped);
  out.witness("r", dep.r);
  out.witness("m", dep.m);
  out.witness("n", dep.n);
  // p^n = q^m, so g1^n and g2^m have the same number of b's in the image of b.
  const Morphism h1 = power(g1, dep.n);
  const Morphism h2 = power(g2, dep.m);
  out.add("i", h1 == h2);
  out.add("ii", g1.image_b.in_star(Letter::B) && g2.image_b.in_star(Letter::B));
  const bool conj = a_conjugates(h1.image_b, h2.image_b);
  if (conj) out.witness("core", b_core(h1.image_b).core.str());
  out.add("iii", g1.image_a == kA && g2.image_a == kA && conj);
  return out.finish();
}

}  // namespace

CommutationReport classify(const Morphism& g1, const Morphism& g2) {
  const TriangularForm f1 = to_triangular(g1);
  const TriangularForm f2 = to_triangular(g2);

  if (!f1.has_core()) return singular_b_image(g1, g2, false);
  if (!f2.has_core()) return singular_b_image(g2, g1, true);

  if (f1.s == 0) return singular_a_image(g1, g2, false);
  if (f2.s == 0) return singular_a_image(g2, g1, true);

  const std::uint64_t p = f1.b_count();
  const std::uint64_t q = f2.b_count();
  const bool swapped = p > q;
  const Morphism& h1 = swapped ? g2 : g1;
  const Morphism& h2 = swapped ? g1 : g2;
  const TriangularForm& e1 = swapped ? f2 : f1;
  const TriangularForm& e2 = swapped ? f1 : f2;
  const std::uint64_t lo = std::min(p, q);
  const std::uint64_t hi = std::max(p, q);

  if (hi == 1) return both_gap_one(f1, f2, false);
  if (lo == 1) return gap_one_vs_many(h1, h2, swapped);

  const MultDependence dep = mult_dependence(lo, hi);
  if (const auto* d = std::get_if<Dependent>(&dep)) return mult_dependent(h1, h2, *d, swapped);
  return mult_independent(e1, e2, h1, h2, swapped);
}

}  // namespace trimorph
