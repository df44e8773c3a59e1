#include "goodstein/hereditary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "goodstein/errors.hpp"

namespace goodstein {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

// ---------------------------------------------------------------------------
// Tree

Tree::Tree(std::vector<Term> terms) {
  if (!terms.empty()) {
    terms_ = std::make_shared<const std::vector<Term>>(std::move(terms));
  }
}

std::span<const Term> Tree::terms() const {
  if (!terms_) return {};
  return {terms_->data(), terms_->size()};
}

std::size_t Tree::size() const noexcept { return terms_ ? terms_->size() : 0; }

const Term& Tree::leading() const {
  if (!terms_) throw Underflow("the zero tree has no terms");
  return terms_->front();
}

const Term& Tree::lowest() const {
  if (!terms_) throw Underflow("the zero tree has no terms");
  return terms_->back();
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.terms_ == b.terms_) return std::strong_ordering::equal;
  auto ta = a.terms();
  auto tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!ta[i].exponent.same_storage(tb[i].exponent)) {
      if (auto c = ta[i].exponent <=> tb[i].exponent; c != 0) return c;
    }
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff <=> tb[i].coeff;
  }
  return ta.size() <=> tb.size();
}

bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }

bool operator==(const Term& a, const Term& b) {
  return a.coeff == b.coeff && a.exponent == b.exponent;
}

// ---------------------------------------------------------------------------
// Canonical form

bool is_canonical(Base base, const Tree& tree) {
  auto terms = tree.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0 || terms[i].coeff >= base.value()) return false;
    if (i > 0 && !(terms[i - 1].exponent > terms[i].exponent)) return false;
    if (!is_canonical(base, terms[i].exponent)) return false;
  }
  return true;
}

HereditaryRep::HereditaryRep(Base base, Tree tree)
    : base_(base), tree_(std::move(tree)) {
  if (!is_canonical(base_, tree_)) {
    throw NonCanonical("tree is not a canonical hereditary representation in base " +
                       std::to_string(base_.value()));
  }
}

// ---------------------------------------------------------------------------
// Construction

namespace {

Tree decompose_u64(std::uint64_t m, std::uint64_t b) {
  std::vector<std::uint64_t> digits;
  for (; m != 0; m /= b) digits.push_back(m % b);
  std::vector<Term> terms;
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (digits[pos] != 0) terms.push_back({digits[pos], decompose_u64(pos, b)});
  }
  return Tree(std::move(terms));
}

// Digits of m in base b, least significant first.
std::vector<std::uint64_t> digits_of(const Natural& m, std::uint64_t b) {
  std::vector<std::uint64_t> digits;
  if (b <= 36) {
    const std::string s = m.get_str(static_cast<int>(b));
    digits.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      const char c = *it;
      digits.push_back(c <= '9' ? static_cast<std::uint64_t>(c - '0')
                                : static_cast<std::uint64_t>(c - 'a' + 10));
    }
    return digits;
  }
  // Peel off chunks of k digits with one machine division each.
  std::uint64_t chunk = b;
  int k = 1;
  while (chunk <= std::numeric_limits<std::uint64_t>::max() / b) {
    chunk *= b;
    ++k;
  }
  Natural q = m;
  while (q != 0) {
    std::uint64_t r = mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), chunk);
    for (int j = 0; j < k; ++j) {
      digits.push_back(r % b);
      r /= b;
    }
  }
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return digits;
}

std::optional<std::uint64_t> pow_u64(std::uint64_t b, std::uint64_t e) {
  u128 acc = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    acc *= b;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

HereditaryRep decompose(std::uint64_t m, Base base) {
  return HereditaryRep::trusted(base, decompose_u64(m, base.value()));
}

HereditaryRep decompose(const Natural& m, Base base) {
  if (m < 0) throw Error("cannot decompose a negative number");
  if (m.fits_ulong_p()) return decompose(m.get_ui(), base);
  const auto digits = digits_of(m, base.value());
  std::vector<Term> terms;
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (digits[pos] != 0) {
      terms.push_back({digits[pos], decompose_u64(pos, base.value())});
    }
  }
  return HereditaryRep::trusted(base, Tree(std::move(terms)));
}

// ---------------------------------------------------------------------------
// Evaluation

std::optional<std::uint64_t> value_u64(const Tree& tree, std::uint64_t base) {
  u128 total = 0;
  for (const Term& t : tree.terms()) {
    auto e = value_u64(t.exponent, base);
    if (!e) return std::nullopt;
    auto p = pow_u64(base, *e);
    if (!p) return std::nullopt;
    total += static_cast<u128>(t.coeff) * *p;
    if (total > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

long double max_term_log10(const Tree& tree, std::uint64_t base,
                           bool leading_only);

// Value of the tree as a long double (inf when too large). Exact while the
// value fits 64 bits, which covers every exponent of a number that can be
// materialized.
long double approx_value(const Tree& tree, std::uint64_t base) {
  if (auto v = value_u64(tree, base)) return static_cast<long double>(*v);
  const long double lg = max_term_log10(tree, base, false);
  if (lg > 4900) return kInf;
  return std::pow(10.0L, lg);
}

// log10 of the largest single term: a lower bound on log10(value). For a
// canonical tree the leading term is the largest and the bound is within
// log10(2) of the true value.
long double max_term_log10(const Tree& tree, std::uint64_t base,
                           bool leading_only) {
  long double best = -kInf;
  const long double log_base = std::log10(static_cast<long double>(base));
  for (const Term& t : tree.terms()) {
    const long double e = approx_value(t.exponent, base);
    const long double lg =
        std::log10(static_cast<long double>(t.coeff)) + e * log_base;
    best = std::max(best, lg);
    if (leading_only) break;
  }
  return best;
}

// True when a value whose log10 is at least `lower_log10` certainly has more
// than max_digits digits.
bool certainly_over(long double lower_log10, std::uint64_t max_digits) {
  if (std::isinf(lower_log10)) return lower_log10 > 0;
  const long double limit = static_cast<long double>(max_digits);
  return lower_log10 > limit + 1e-9L * std::max(1.0L, limit);
}

bool within_digits(const Natural& v, std::uint64_t max_digits) {
  const std::uint64_t rough = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (rough <= max_digits) return true;
  if (rough > max_digits + 1) return false;
  return decimal_digits(v) <= max_digits;
}

void mul_by_power(Natural& acc, std::uint64_t base, std::uint64_t e,
                  Natural& scratch) {
  if (e == 0) return;
  if (auto p = pow_u64(base, e)) {
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), *p);
    return;
  }
  mpz_ui_pow_ui(scratch.get_mpz_t(), base, e);
  mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), scratch.get_mpz_t());
}

// coeffs[i] * b^exps[i] with exps non-increasing.
struct Polynomial {
  std::vector<std::uint64_t> coeffs;
  std::vector<std::uint64_t> exps;
};

// Sum of terms [lo, hi) divided by b^exps[hi-1]. Splitting in halves keeps
// the multiplications balanced, which matters for reps with many terms.
Natural sum_terms(const Polynomial& p, std::size_t lo, std::size_t hi,
                  std::uint64_t b) {
  Natural scratch;
  if (hi - lo <= 16) {
    Natural acc(static_cast<unsigned long>(p.coeffs[lo]));
    for (std::size_t i = lo + 1; i < hi; ++i) {
      mul_by_power(acc, b, p.exps[i - 1] - p.exps[i], scratch);
      mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), p.coeffs[i]);
    }
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  Natural high = sum_terms(p, lo, mid, b);
  mul_by_power(high, b, p.exps[mid - 1] - p.exps[hi - 1], scratch);
  high += sum_terms(p, mid, hi, b);
  return high;
}

Natural sum_polynomial(const Polynomial& p, std::uint64_t b) {
  Natural acc = sum_terms(p, 0, p.coeffs.size(), b);
  Natural scratch;
  mul_by_power(acc, b, p.exps.back(), scratch);
  return acc;
}

}  // namespace

long double approx_log10(const HereditaryRep& r) {
  if (r.is_zero()) return -kInf;
  return max_term_log10(r.tree(), r.base().value(), true);
}

std::optional<Natural> try_evaluate(const HereditaryRep& r,
                                    const Budget& budget) {
  if (r.is_zero()) return Natural(0);
  if (certainly_over(approx_log10(r), budget.max_digits)) return std::nullopt;

  const std::uint64_t b = r.base().value();
  Polynomial p;
  for (const Term& t : r.tree().terms()) {
    auto e = value_u64(t.exponent, b);
    if (!e) return std::nullopt;
    p.coeffs.push_back(t.coeff);
    p.exps.push_back(*e);
  }
  Natural acc = sum_polynomial(p, b);
  if (!within_digits(acc, budget.max_digits)) return std::nullopt;
  return acc;
}

Natural evaluate(const HereditaryRep& r, const Budget& budget) {
  auto v = try_evaluate(r, budget);
  if (!v) {
    throw BudgetExceeded("value has more than " +
                         std::to_string(budget.max_digits) + " decimal digits");
  }
  return std::move(*v);
}

Natural rebase(const HereditaryRep& r, Base u, const Budget& budget) {
  if (r.is_zero()) return 0;
  const std::uint64_t x = u.value();
  const auto over = [&] {
    return BudgetExceeded("rebased value has more than " +
                          std::to_string(budget.max_digits) + " decimal digits");
  };
  if (certainly_over(max_term_log10(r.tree(), x, false), budget.max_digits)) {
    throw over();
  }
  // Below the rep's own base the exponents can change order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  for (const Term& t : r.tree().terms()) {
    auto e = value_u64(t.exponent, x);
    if (!e) throw over();
    parts.emplace_back(*e, t.coeff);
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  Polynomial p;
  for (const auto& [e, c] : parts) {
    p.exps.push_back(e);
    p.coeffs.push_back(c);
  }
  Natural total = sum_polynomial(p, x);
  if (!within_digits(total, budget.max_digits)) throw over();
  return total;
}

// ---------------------------------------------------------------------------
// Rank, bump, decrement

HereditaryRep rank(const HereditaryRep& r) {
  if (r.is_zero()) return HereditaryRep(r.base());
  return HereditaryRep::trusted(r.base(), r.tree().leading().exponent);
}

Natural rank_value(const HereditaryRep& r, const Budget& budget) {
  return evaluate(rank(r), budget);
}

bool has_positive_rank(const HereditaryRep& r) {
  return !r.is_zero() && !r.tree().leading().exponent.is_zero();
}

HereditaryRep bump(const HereditaryRep& r) {
  return HereditaryRep::trusted(r.base().next(), r.tree());
}

namespace {

Tree decrement_tree(const Tree& tree, std::uint64_t b, const Budget& budget) {
  if (tree.is_zero()) throw Underflow("cannot decrement zero");
  auto old_terms = tree.terms();
  const Term low = old_terms.back();

  std::vector<Term> terms;
  std::uint64_t expansion = 0;
  if (!low.exponent.is_zero()) {
    // c*b^e - 1 = (c-1)*b^e + sum_{j=e-1..0} (b-1)*b^j: e new terms.
    auto e = value_u64(low.exponent, b);
    if (!e || *e > budget.max_borrow_terms) {
      throw BudgetExceeded(
          "borrow in base " + std::to_string(b) + " expands into " +
          (e ? std::to_string(*e) : std::string("more than 2^64")) +
          " terms (max_borrow_terms " + std::to_string(budget.max_borrow_terms) +
          ")");
    }
    expansion = *e;
  }
  terms.reserve(old_terms.size() + expansion);
  terms.assign(old_terms.begin(), old_terms.end() - 1);
  if (low.coeff > 1) terms.push_back({low.coeff - 1, low.exponent});
  for (Tree e = low.exponent; !e.is_zero();) {
    e = decrement_tree(e, b, budget);
    terms.push_back({b - 1, e});
  }
  return Tree(std::move(terms));
}

}  // namespace

HereditaryRep decrement(const HereditaryRep& r, const Budget& budget) {
  return HereditaryRep::trusted(
      r.base(), decrement_tree(r.tree(), r.base().value(), budget));
}

}  // namespace goodstein
