#pragma once

#include <cstdint>

namespace goodstein {

// Resource limits shared by every operation that can blow up.
struct Budget {
  // Maximum number of sequence terms generated (the seed is term 1).
  std::uint64_t max_steps = 100'000;
  // Values with more decimal digits than this are not materialized.
  std::uint64_t max_digits = 1'000'000;
  // Largest b^e - 1 expansion a single borrow may produce.
  std::uint64_t max_borrow_terms = std::uint64_t{1} << 20;

  // Throws Error unless every field is positive.
  void validate() const;

  friend bool operator==(const Budget&, const Budget&) = default;
};

}  // namespace goodstein
