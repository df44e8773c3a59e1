#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "goodstein/budget.hpp"
#include "goodstein/natural.hpp"

namespace goodstein {

struct Term;

// Base-free shape of a hereditary representation: a sum of
// coeff * base^exponent with every exponent again a Tree. The base is kept
// by HereditaryRep, so changing the base never touches the tree.
//
// Terms are stored highest exponent first. Storage is immutable and shared
// between copies; exponent subtrees are shared between the terms of a
// sequence, which keeps a Goodstein step proportional to the number of
// top-level terms rather than the size of the whole tree.
class Tree {
 public:
  // The zero tree (empty sum).
  Tree() = default;
  // No validation; see is_canonical().
  explicit Tree(std::vector<Term> terms);

  std::span<const Term> terms() const;
  bool is_zero() const noexcept { return !terms_; }
  std::size_t size() const noexcept;

  const Term& leading() const;
  const Term& lowest() const;

  // Lexicographic order on (exponent, coeff) from the highest term down.
  // For canonical trees in a common base this is numeric order, and it is
  // always the Cantor normal form order of the mirrored ordinals.
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
  friend bool operator==(const Tree& a, const Tree& b);

  // Address of the shared storage; null for zero. Stable while any copy of
  // the tree is alive.
  const void* identity() const noexcept { return terms_.get(); }

  // True when both trees share storage (cheap identity, not equality).
  bool same_storage(const Tree& other) const noexcept {
    return terms_ == other.terms_;
  }

 private:
  std::shared_ptr<const std::vector<Term>> terms_;
};

struct Term {
  std::uint64_t coeff = 0;
  Tree exponent;
};

bool operator==(const Term& a, const Term& b);

// A natural number written in hereditary base-b notation.
//
// Invariants: 1 <= coeff <= base-1 for every term at every depth, exponents
// strictly decreasing, exponents themselves canonical in the same base, and
// the empty sum is zero.
class HereditaryRep {
 public:
  explicit HereditaryRep(Base base) : base_(base) {}
  // Throws NonCanonical if `tree` breaks an invariant for `base`.
  HereditaryRep(Base base, Tree tree);

  // Skips validation. Only for trees produced by the operations below.
  static HereditaryRep trusted(Base base, Tree tree) {
    HereditaryRep r(base);
    r.tree_ = std::move(tree);
    return r;
  }

  Base base() const noexcept { return base_; }
  const Tree& tree() const noexcept { return tree_; }
  bool is_zero() const noexcept { return tree_.is_zero(); }

  friend bool operator==(const HereditaryRep& a, const HereditaryRep& b) {
    return a.base_ == b.base_ && a.tree_ == b.tree_;
  }

 private:
  Base base_;
  Tree tree_;
};

bool is_canonical(Base base, const Tree& tree);
inline bool is_canonical(const HereditaryRep& r) {
  return is_canonical(r.base(), r.tree());
}

HereditaryRep decompose(const Natural& m, Base base);
HereditaryRep decompose(std::uint64_t m, Base base);

// Exact value. Throws BudgetExceeded when it has more than
// budget.max_digits decimal digits.
Natural evaluate(const HereditaryRep& r, const Budget& budget = {});

// Like evaluate() but reports an over-budget value as nullopt.
std::optional<Natural> try_evaluate(const HereditaryRep& r,
                                    const Budget& budget = {});

// Value of the tree at `base` if it fits in 64 bits.
std::optional<std::uint64_t> value_u64(const Tree& tree, std::uint64_t base);

// log10 of the value of a canonical tree, accurate to within log10(2);
// -inf for zero and +inf when it does not fit a long double.
long double approx_log10(const HereditaryRep& r);

// Exponent of the leading term; zero for the zero rep.
HereditaryRep rank(const HereditaryRep& r);
Natural rank_value(const HereditaryRep& r, const Budget& budget = {});
// rank(r) >= 1, decided on the tree.
bool has_positive_rank(const HereditaryRep& r);

// Replace the base b by b+1 everywhere.
HereditaryRep bump(const HereditaryRep& r);

// Representation of value-1 in the same base, computed on the tree.
// Throws Underflow for zero and BudgetExceeded when a borrow would expand
// into more than budget.max_borrow_terms terms.
HereditaryRep decrement(const HereditaryRep& r, const Budget& budget = {});

// Evaluate the tree with every base occurrence replaced by u. The tree is
// not renormalized, so coefficients may be >= u.
Natural rebase(const HereditaryRep& r, Base u, const Budget& budget = {});

}  // namespace goodstein
