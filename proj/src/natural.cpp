#include "goodstein/natural.hpp"

#include <string>

#include "goodstein/budget.hpp"
#include "goodstein/errors.hpp"

namespace goodstein {

std::string to_decimal(const Natural& n) { return n.get_str(10); }

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw Error("expected a natural number, got empty text");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error("expected a natural number, got '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

std::uint64_t decimal_digits(const Natural& n) {
  if (n == 0) return 1;
  // mpz_sizeinbase may overshoot by one.
  std::uint64_t d = mpz_sizeinbase(n.get_mpz_t(), 10);
  Natural bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, d - 1);
  return abs(n) < bound ? d - 1 : d;
}

Base::Base(std::uint64_t value) : value_(value) {
  if (value < 2) {
    throw InvalidBase("base must be at least 2, got " + std::to_string(value));
  }
}

Base Base::next() const {
  if (value_ == UINT64_MAX) throw BudgetExceeded("base exceeds 64 bits");
  return Base(value_ + 1);
}

void Budget::validate() const {
  if (max_steps == 0 || max_digits == 0 || max_borrow_terms == 0) {
    throw Error("budget limits must be positive");
  }
}

}  // namespace goodstein
