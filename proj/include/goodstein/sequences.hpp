#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goodstein/budget.hpp"
#include "goodstein/hereditary.hpp"
#include "goodstein/natural.hpp"

namespace goodstein {

enum class SeqKind {
  kG,  // Goodstein sequence: seed m written in base 2
  kL,  // k^k written in base k
};

std::string_view to_string(SeqKind kind);
std::optional<SeqKind> parse_seq_kind(std::string_view text);

struct SeqSpec {
  SeqKind kind = SeqKind::kG;
  // The start value for kG, and k for kL.
  Natural seed;

  static SeqSpec goodstein(Natural m) { return {SeqKind::kG, std::move(m)}; }
  static SeqSpec l_sequence(std::uint64_t k) { return {SeqKind::kL, k}; }

  // Throws Error for an L sequence with k < 2 (or k beyond 64 bits).
  void validate() const;
  Base start_base() const;
  HereditaryRep first_rep() const;

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;
};

// What the step leaving a term does to its value.
enum class StepClass { kDescent, kPlateau, kIncrease };

std::string_view to_string(StepClass c);
std::optional<StepClass> parse_step_class(std::string_view text);

struct SeqTerm {
  std::uint64_t index;  // 1-based; term 1 is the seed
  HereditaryRep rep;
  std::optional<Natural> value;          // absent when over the digit budget
  std::optional<StepClass> step_class;   // absent for the zero term
};

// Builds a term, materializing its value when it fits the digit budget.
SeqTerm make_term(std::uint64_t index, HereditaryRep rep, const Budget& budget);

struct Outcome {
  enum class Kind { kTerminated, kStepLimit, kBudgetExceeded };

  Kind kind = Kind::kStepLimit;
  std::uint64_t terminated_at = 0;  // index of the zero term
  std::string detail;

  static Outcome terminated(std::uint64_t n) {
    return {Kind::kTerminated, n, {}};
  }
};

// "Terminated(6)", "StepLimit" or "BudgetExceeded(<detail>)".
std::string to_string(const Outcome& outcome);

struct Sequence {
  SeqSpec spec;
  Budget budget;
  std::vector<SeqTerm> terms;
  Outcome outcome;

  bool terminated() const {
    return outcome.kind == Outcome::Kind::kTerminated;
  }
};

// Structural prediction of the next value relative to this one:
//   rank 0                                  -> kDescent  (next = v - 1)
//   rank 1 with leading term 1*b^1 (+ c)    -> kPlateau  (next = v)
//   anything else                           -> kIncrease (next > v)
// Throws Underflow for zero.
StepClass classify_step(const HereditaryRep& rep);

// bump then decrement. Throws Underflow for a zero term.
SeqTerm goodstein_step(const SeqTerm& term, const Budget& budget = {});

using TermVisitor = std::function<void(const SeqTerm&)>;

// Streams terms 1, 2, ... to `visit` without storing them. Stops at the
// zero term, after term budget.max_steps, or when a borrow exceeds the
// budget (the terms visited so far stay valid).
Outcome walk(const SeqSpec& spec, const Budget& budget,
             const TermVisitor& visit);

// Same, continuing from `start` (which is visited first). budget.max_steps
// is the last index visited, not a count.
Outcome walk_from(SeqTerm start, const Budget& budget,
                  const TermVisitor& visit);

// Stored prefix. Stops with kBudgetExceeded if the stored reps together
// would hold more than kMaxStoredTerms top-level terms; use walk() for
// sequences whose reps are wide.
inline constexpr std::uint64_t kMaxStoredTerms = std::uint64_t{1} << 24;
Sequence generate(const SeqSpec& spec, const Budget& budget = {});

// For a Plateau or Descent term, the index of the zero term. A plateau at
// value v ends at 2v for Goodstein sequences (2v + index + 1 - base in
// general); a descent at value v ends v terms later. nullopt for Increase
// and for the zero term.
std::optional<Natural> predict_termination(const SeqTerm& term);

// Tracks the earliest term attaining the largest value seen so far.
// Terms must be fed in index order without gaps. Values are compared
// directly when both are materialized; otherwise the step classes in
// between decide. Throws BudgetExceeded when neither can.
class LargestTermTracker {
 public:
  void observe(const SeqTerm& term);

  bool empty() const noexcept { return !best_index_; }
  Base base() const;
  std::uint64_t index() const;

 private:
  struct Since {
    bool increase = false;
    bool descent = false;
  };

  std::optional<std::uint64_t> best_index_;
  std::optional<Base> best_base_;
  std::optional<Natural> best_value_;
  std::optional<StepClass> last_class_;
  std::uint64_t last_index_ = 0;
  // Step classes between the best term and the latest one.
  Since since_best_;
};

// Base of the earliest largest term (u_k for a prefix of length k).
Base largest_term_base(std::span<const SeqTerm> prefix);

// m_n(x): the n-th term's tree with its base replaced by x.
Natural functional_eval(const SeqSpec& spec, std::uint64_t n, Base x,
                        const Budget& budget = {});

struct StepRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  friend bool operator==(const StepRange&, const StepRange&) = default;
};

// Term indices grouped by the class of the step leaving them.
struct PhaseProfile {
  std::optional<StepRange> increase;
  std::optional<StepRange> plateau;
  std::optional<StepRange> descent;
  std::optional<std::uint64_t> terminated_at;
  std::optional<std::uint64_t> n1;  // terminated_at / 2 when even
};

// Throws OscillationDetected if the classes are not Increase* Plateau*
// Descent*.
PhaseProfile phase_profile(std::span<const SeqTerm> terms);

}  // namespace goodstein
