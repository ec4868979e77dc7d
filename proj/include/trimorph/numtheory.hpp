#pragma once

#include <cstdint>
#include <variant>

namespace trimorph {

/// n = base^exponent with exponent maximal, so base is not itself a perfect power.
struct PrimitiveRoot {
  std::uint64_t base;
  std::uint64_t exponent;

  friend bool operator==(const PrimitiveRoot&, const PrimitiveRoot&) = default;
};

/// Throws NotApplicable for n < 2.
PrimitiveRoot primitive_root(std::uint64_t n);

/// Largest x with x^e <= n (e >= 1).
std::uint64_t integer_root(std::uint64_t n, std::uint64_t e);

struct Independent {
  friend bool operator==(const Independent&, const Independent&) = default;
};

/// p = r^m, q = r^n with gcd(m, n) = 1.
struct Dependent {
  std::uint64_t r;
  std::uint64_t m;
  std::uint64_t n;

  friend bool operator==(const Dependent&, const Dependent&) = default;
};

using MultDependence = std::variant<Independent, Dependent>;

/// Throws NotApplicable unless p, q >= 2.
MultDependence mult_dependence(std::uint64_t p, std::uint64_t q);

/// i = base^valuation * j with j not divisible by base, digit = j mod base.
struct ValuationDigit {
  std::uint64_t valuation;
  std::uint64_t digit;

  friend bool operator==(const ValuationDigit&, const ValuationDigit&) = default;
};

/// Throws NotApplicable unless i >= 1 and base >= 2.
ValuationDigit val_and_digit(std::uint64_t i, std::uint64_t base);

}  // namespace trimorph
