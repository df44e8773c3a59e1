#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace goodstein {

// Unbounded non-negative integer. GMP's signed integer is used as the
// carrier; functions that produce a Natural never return a negative value.
// Differences (e.g. rebased step deltas) are computed in the same type and
// may be negative.
using Natural = mpz_class;

std::string to_decimal(const Natural& n);

// Parses a non-empty string of decimal digits. Throws Error otherwise.
Natural parse_natural(std::string_view text);

// Exact number of decimal digits; 1 for zero.
std::uint64_t decimal_digits(const Natural& n);

// Base of a positional/hereditary representation; always >= 2.
class Base {
 public:
  explicit Base(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  Base next() const;

  friend auto operator<=>(const Base&, const Base&) = default;

 private:
  std::uint64_t value_;
};

}  // namespace goodstein
