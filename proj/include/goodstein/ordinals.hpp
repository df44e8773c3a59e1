#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goodstein/hereditary.hpp"
#include "goodstein/natural.hpp"
#include "goodstein/sequences.hpp"

namespace goodstein {

struct OrdinalTerm;

// An ordinal below epsilon_0 in Cantor normal form:
//   w^(e_1)*c_1 + w^(e_2)*c_2 + ...   with e_1 > e_2 > ... and c_i >= 1.
// Finite trees only, so every value is below epsilon_0.
class Ordinal {
 public:
  Ordinal() = default;  // zero
  // Throws NonCanonical unless exponents strictly decrease and every
  // coefficient is positive.
  explicit Ordinal(std::vector<OrdinalTerm> terms);

  static Ordinal omega();

  std::span<const OrdinalTerm> terms() const;
  bool is_zero() const noexcept { return !terms_; }
  bool is_finite() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  struct Unchecked {};
  Ordinal(Unchecked, std::vector<OrdinalTerm> terms);
  friend struct OrdinalBuilder;

  std::shared_ptr<const std::vector<OrdinalTerm>> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Natural coeff;
};

// Replace the base by w: c*b^e becomes w^(mirror(e))*c.
Ordinal mirror(const HereditaryRep& r);

Ordinal from_natural(const Natural& n);

inline std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  return a <=> b;
}

// "w^(E)*c" terms joined by " + ", the constant term as a bare decimal,
// zero as "0". mirror(26 in base 3) prints "w^(2)*2 + w^(1)*2 + 2".
std::string to_string(const Ordinal& a);

// Inverse of to_string(). Throws SyntaxError or NonCanonical.
Ordinal parse_ordinal(std::string_view text);

enum class Domination {
  kStrict,  // mirror(r) > [value(r)]: r has a term with a positive exponent
  kEqual,   // mirror(r) = [value(r)]: r is a constant
};

Domination dominates_natural(const HereditaryRep& r);

struct DecreaseAudit {
  bool decreasing = true;
  // Index k such that mirror(term k) is not above mirror(term k+1).
  std::optional<std::uint64_t> violation;
  // First materialized term where dominates_natural() disagrees with the
  // direct comparison of mirror(rep) against [value]. Never expected; kept
  // apart from `violation` because it is a different claim.
  std::optional<std::uint64_t> domination_violation;
  std::uint64_t pairs_checked = 0;
};

class MirrorMemo;

// Streaming form of verify_decreasing(), for walk(). Consecutive terms of a
// sequence share every term above the lowest few, and equal trees have
// equal mirrors, so only the mirrors of the differing lower parts are built
// and compared. This keeps the audit fast however wide the terms get.
class MirrorAuditor {
 public:
  MirrorAuditor();
  ~MirrorAuditor();
  MirrorAuditor(const MirrorAuditor&) = delete;
  MirrorAuditor& operator=(const MirrorAuditor&) = delete;

  void observe(const SeqTerm& term);
  const DecreaseAudit& result() const noexcept { return audit_; }

 private:
  std::unique_ptr<MirrorMemo> memo_;
  std::optional<Tree> previous_;
  std::uint64_t previous_index_ = 0;
  DecreaseAudit audit_;
};

// Checks that the mirrored sequence strictly decreases.
DecreaseAudit verify_decreasing(std::span<const SeqTerm> terms);

}  // namespace goodstein
