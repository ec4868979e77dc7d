#pragma once

#include <cstdint>

#include "trimorph/error.hpp"

namespace trimorph {

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw CountOverflow("64-bit count overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw CountOverflow("64-bit count overflow in multiplication");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp > 0) {
    if (exp & 1U) r = checked_mul(r, base);
    exp >>= 1U;
    if (exp > 0) base = checked_mul(base, base);
  }
  return r;
}

}  // namespace trimorph
