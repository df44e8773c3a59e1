#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goodstein/budget.hpp"
#include "goodstein/natural.hpp"
#include "goodstein/sequences.hpp"

namespace goodstein {

// Every checkable statement about Goodstein sequences, in report order.
enum class ClaimId {
  kLemma1,  // a terminating G(m), m > 3, strictly decreases somewhere
  kLemma2,  // a multi-term rep never decreases
  kLemma3,  // a*b^l with 1 < a < b: increase if l >= 1, decrease if l = 0
  kLemma4,  // 1*b^l with b <= l: increase
  kLemma5,  // 1*b^l with l < b: increase/equal/decrease for l > 1, 1, 0
  kLemma6,  // terminating at n: n = 2*n1 and term n1-1 is 1*n1^1
  kLemma7,  // terminating at n: n = 2(2*n2+1) and term n2-1 is 2*n2^1
  kLemma8,  // L(k) terminates (never decidable at desk scale)
  kCor61,   // G(k) = n - k for n1 <= k < n
  kCor71,   // G(k) = G(k+1) for n2 <= k < 2*n2
  kThm1,    // descent, plateau and increase clauses in the n2 layout
  kThm2,    // convergent iff finitely bounded
  kThm3,    // L(n, k) > G(n, m) for k = max(n, p)
  kThesis,  // no base u makes the rebased sequence strictly increase
  kSec9,    // differences of the functional sequence m_n(x)
};

std::span<const ClaimId> all_claims();
std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view text);

// Concrete evidence for a failure, recomputable from the exported sequence.
// `values` are the values of terms index, index+1, ... unless `base` is set,
// in which case they are terms index and index+1 rebased to `base` (plus a
// bound, for sec9). thm3 witnesses hold L(k) and G(m) values at `index`.
struct Witness {
  std::uint64_t index = 0;
  std::vector<Natural> values;
  std::optional<std::uint64_t> base;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  enum class Kind { kHolds, kFails, kNotApplicable, kUnresolved };

  Kind kind = Kind::kUnresolved;
  // Reason for kNotApplicable/kUnresolved; a short note otherwise.
  std::string detail;
  std::optional<Witness> witness;
  std::uint64_t steps_examined = 0;

  static Verdict holds(std::uint64_t examined, std::string note = {});
  static Verdict fails(Witness w, std::uint64_t examined, std::string note = {});
  static Verdict not_applicable(std::string reason);
  static Verdict unresolved(std::string reason, std::uint64_t examined = 0);
};

std::string_view to_string(Verdict::Kind kind);

Verdict check_lemma1(const Sequence& seq);
Verdict check_lemma2(const Sequence& seq);
Verdict check_lemma3(const Sequence& seq);
Verdict check_lemma4(const Sequence& seq);
Verdict check_lemma5(const Sequence& seq);
Verdict check_lemma6(const Sequence& seq);
Verdict check_cor61(const Sequence& seq);
Verdict check_lemma7(const Sequence& seq);
Verdict check_cor71(const Sequence& seq);
Verdict check_thm1(const Sequence& seq);
Verdict check_thm2(const Sequence& seq);

struct Lemma8Thm3 {
  Verdict thm3;
  // Termination of L(k) itself; Unresolved whenever k exists.
  Verdict lemma8;
  std::optional<std::uint64_t> k;
};

// `g` is G(m) as generated under its own budget.
Lemma8Thm3 check_lemma8_thm3(const Sequence& g);
Lemma8Thm3 check_lemma8_thm3(const Natural& m, const Budget& budget);

struct ThesisCheck {
  Verdict verdict;
  // u_k for k = 1 .. prefix length.
  std::vector<std::uint64_t> u_trajectory;
  // "stabilized at u" or "growing"; a finite prefix cannot decide the limit.
  std::string limit_behaviour;
};

ThesisCheck check_thesis(const Sequence& seq, std::span<const Base> bases);

Verdict check_sec9(const Sequence& seq, Base x);

struct SuiteOptions {
  std::vector<Base> thesis_bases;  // empty -> 3..10
  std::vector<Base> sec9_bases;    // empty -> 3..10
};

Verdict check_claim(ClaimId id, const Sequence& seq,
                    const SuiteOptions& options = {});

struct ClaimReport {
  ClaimId claim;
  SeqSpec spec;
  Budget budget;
  Verdict verdict;
  std::chrono::nanoseconds elapsed{0};
};

// Reports ordered by instance, then by claim in catalog order. A checker
// that throws is reported as Unresolved; the suite never aborts.
std::vector<ClaimReport> run_suite(std::span<const SeqSpec> instances,
                                   std::span<const ClaimId> claims,
                                   const Budget& budget,
                                   const SuiteOptions& options = {});

// Same, over sequences that are already generated (e.g. read back from an
// export).
std::vector<ClaimReport> run_suite(std::span<const Sequence> sequences,
                                   std::span<const ClaimId> claims,
                                   const SuiteOptions& options = {});

// Re-runs the claim on `seq` and confirms it fails with the same witness,
// and that the witness values match the values stored in `seq`.
bool replay_failure(ClaimId id, const Sequence& seq, const Verdict& verdict,
                    const SuiteOptions& options = {});

}  // namespace goodstein
