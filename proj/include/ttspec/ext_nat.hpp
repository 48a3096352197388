#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace ttspec {

// Natural number extended by a top element: {0, 1, 2, ...} u {inf}.
// Used both for chromatic levels (always >= 1) and for the values of
// admissible functions (>= 0).
class ExtNat
{
public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::int64_t n)  // NOLINT: implicit from integers
  : value_(n)
  {}

  static constexpr ExtNat infinity()
  {
    ExtNat r;
    r.value_ = kInf;
    return r;
  }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }

  // Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  constexpr auto operator<=>(const ExtNat &) const = default;

  // Saturating: inf + k = inf.
  friend constexpr ExtNat operator+(ExtNat a, std::int64_t k)
  {
    return a.is_infinite() ? a : ExtNat(a.value_ + k);
  }

  std::string to_string() const
  {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

inline constexpr ExtNat kInfinity = ExtNat::infinity();

// Parses "inf" / "infinity" / a non-negative decimal. Throws DomainError.
ExtNat parse_ext_nat(const std::string &text);

bool is_prime(std::int64_t n);

// Returns k with base^k == n, or -1 if n is not a power of base.
int exact_log(std::int64_t n, std::int64_t base);

} // namespace ttspec
