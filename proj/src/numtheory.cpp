#include "trimorph/numtheory.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "trimorph/checked.hpp"
#include "trimorph/error.hpp"

namespace trimorph {

namespace {

// x^e compared against n without overflow: -1, 0, 1.
int compare_power(std::uint64_t x, std::uint64_t e, std::uint64_t n) {
  std::uint64_t acc = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (__builtin_mul_overflow(acc, x, &acc)) return 1;
    if (acc > n) return 1;
  }
  return acc == n ? 0 : -1;
}

}  // namespace

std::uint64_t integer_root(std::uint64_t n, std::uint64_t e) {
  if (e == 0) throw NotApplicable("integer_root: exponent must be positive");
  if (e == 1 || n < 2) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << ((64 + e - 1) / e);  // 2^ceil(64/e) > root
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (compare_power(mid, e, n) <= 0) lo = mid;
    else hi = mid;
  }
  return lo;
}

PrimitiveRoot primitive_root(std::uint64_t n) {
  if (n < 2) throw NotApplicable("primitive_root needs n >= 2, got " + std::to_string(n));
  const auto max_exp = static_cast<std::uint64_t>(std::bit_width(n) - 1);
  for (std::uint64_t e = max_exp; e >= 2; --e) {
    const std::uint64_t r = integer_root(n, e);
    if (r >= 2 && compare_power(r, e, n) == 0) return {r, e};
  }
  return {n, 1};
}

MultDependence mult_dependence(std::uint64_t p, std::uint64_t q) {
  if (p < 2 || q < 2) throw NotApplicable("mult_dependence needs p, q >= 2");
  const PrimitiveRoot rp = primitive_root(p);
  const PrimitiveRoot rq = primitive_root(q);
  if (rp.base != rq.base) return Independent{};
  const std::uint64_t g = std::gcd(rp.exponent, rq.exponent);
  return Dependent{checked_pow(rp.base, g), rp.exponent / g, rq.exponent / g};
}

ValuationDigit val_and_digit(std::uint64_t i, std::uint64_t base) {
  if (i == 0 || base < 2) throw NotApplicable("val_and_digit needs i >= 1 and base >= 2");
  std::uint64_t m = 0;
  while (i % base == 0) {
    i /= base;
    ++m;
  }
  return {m, i % base};
}

}  // namespace trimorph
