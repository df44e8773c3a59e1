#include "goodstein/sequences.hpp"

#include <limits>
#include <utility>

#include "goodstein/errors.hpp"

namespace goodstein {

std::string_view to_string(SeqKind kind) {
  return kind == SeqKind::kG ? "G" : "L";
}

std::optional<SeqKind> parse_seq_kind(std::string_view text) {
  if (text == "G" || text == "g") return SeqKind::kG;
  if (text == "L" || text == "l") return SeqKind::kL;
  return std::nullopt;
}

void SeqSpec::validate() const {
  if (seed < 0) throw Error("seed must be a natural number");
  if (kind == SeqKind::kL) {
    if (seed < 2) throw Error("L(k) needs k >= 2");
    if (!seed.fits_ulong_p()) throw Error("L(k) needs k below 2^64");
  }
}

Base SeqSpec::start_base() const {
  validate();
  return kind == SeqKind::kG ? Base(2) : Base(seed.get_ui());
}

HereditaryRep SeqSpec::first_rep() const {
  const Base b = start_base();
  if (kind == SeqKind::kG) return decompose(seed, b);
  // k^k in base k is 1*k^(1*k^(1*k^0)) whatever k is.
  const Tree one({Term{1, Tree()}});
  const Tree k({Term{1, one}});
  return HereditaryRep::trusted(b, Tree({Term{1, k}}));
}

std::string_view to_string(StepClass c) {
  switch (c) {
    case StepClass::kDescent:
      return "Descent";
    case StepClass::kPlateau:
      return "Plateau";
    case StepClass::kIncrease:
      return "Increase";
  }
  return "?";
}

std::optional<StepClass> parse_step_class(std::string_view text) {
  for (auto c : {StepClass::kDescent, StepClass::kPlateau, StepClass::kIncrease}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

StepClass classify_step(const HereditaryRep& rep) {
  if (rep.is_zero()) throw Underflow("no step leaves the zero term");
  const Term& lead = rep.tree().leading();
  if (lead.exponent.is_zero()) return StepClass::kDescent;
  auto e = lead.exponent.terms();
  // Exponent exactly 1 = 1*b^0; any lower terms are then constants.
  if (lead.coeff == 1 && e.size() == 1 && e[0].coeff == 1 &&
      e[0].exponent.is_zero()) {
    return StepClass::kPlateau;
  }
  return StepClass::kIncrease;
}

SeqTerm make_term(std::uint64_t index, HereditaryRep rep, const Budget& budget) {
  SeqTerm t{index, std::move(rep), std::nullopt, std::nullopt};
  t.value = try_evaluate(t.rep, budget);
  if (!t.rep.is_zero()) t.step_class = classify_step(t.rep);
  return t;
}

std::string to_string(const Outcome& outcome) {
  switch (outcome.kind) {
    case Outcome::Kind::kTerminated:
      return "Terminated(" + std::to_string(outcome.terminated_at) + ")";
    case Outcome::Kind::kStepLimit:
      return "StepLimit";
    case Outcome::Kind::kBudgetExceeded:
      return "BudgetExceeded(" + outcome.detail + ")";
  }
  return "?";
}

SeqTerm goodstein_step(const SeqTerm& term, const Budget& budget) {
  if (term.rep.is_zero()) throw Underflow("the sequence already reached 0");
  return make_term(term.index + 1, decrement(bump(term.rep), budget), budget);
}

namespace {

// Visits terms from `start` on. `visit` returns false to stop, in which case
// `stop_detail` becomes a BudgetExceeded outcome.
template <typename Visit>
Outcome run(SeqTerm start, const Budget& budget, Visit&& visit,
            const std::string& stop_detail = {}) {
  SeqTerm term = std::move(start);
  while (true) {
    if (!visit(term)) return {Outcome::Kind::kBudgetExceeded, 0, stop_detail};
    if (term.rep.is_zero()) return Outcome::terminated(term.index);
    if (term.index >= budget.max_steps) return {};
    try {
      term = goodstein_step(term, budget);
    } catch (const BudgetExceeded& e) {
      return {Outcome::Kind::kBudgetExceeded, 0, e.what()};
    }
  }
}

}  // namespace

Outcome walk(const SeqSpec& spec, const Budget& budget,
             const TermVisitor& visit) {
  budget.validate();
  return walk_from(make_term(1, spec.first_rep(), budget), budget, visit);
}

Outcome walk_from(SeqTerm start, const Budget& budget,
                  const TermVisitor& visit) {
  return run(std::move(start), budget, [&](const SeqTerm& t) {
    visit(t);
    return true;
  });
}

Sequence generate(const SeqSpec& spec, const Budget& budget) {
  budget.validate();
  Sequence seq{spec, budget, {}, {}};
  std::uint64_t stored = 0;
  seq.outcome = run(
      make_term(1, spec.first_rep(), budget), budget,
      [&](const SeqTerm& t) {
        stored += t.rep.tree().size();
        if (stored > kMaxStoredTerms) return false;
        seq.terms.push_back(t);
        return true;
      },
      "stored representations exceed " + std::to_string(kMaxStoredTerms) +
          " terms; stream the sequence instead");
  return seq;
}

std::optional<Natural> predict_termination(const SeqTerm& term) {
  if (!term.value || !term.step_class) return std::nullopt;
  const Natural& v = *term.value;
  switch (*term.step_class) {
    case StepClass::kDescent:
      return Natural(term.index) + v;
    case StepClass::kPlateau: {
      // The constant counts down to 0 while the value holds, then the
      // value itself counts down.
      Natural n = 2 * v + term.index + 1;
      n -= term.rep.base().value();
      return n;
    }
    case StepClass::kIncrease:
      return std::nullopt;
  }
  return std::nullopt;
}

void LargestTermTracker::observe(const SeqTerm& term) {
  if (best_index_ && term.index != last_index_ + 1) {
    throw Error("terms must be observed in order without gaps");
  }
  bool better = false;
  if (!best_index_) {
    better = true;
  } else {
    if (last_class_ == StepClass::kIncrease) since_best_.increase = true;
    if (last_class_ == StepClass::kDescent) since_best_.descent = true;
    if (best_value_ && term.value) {
      better = *term.value > *best_value_;
    } else if (best_value_ || term.value) {
      // A value is elided exactly when it is over the digit budget, so it is
      // larger than any materialized one.
      better = !term.value;
    } else if (!since_best_.increase) {
      better = false;
    } else if (!since_best_.descent) {
      better = true;
    } else {
      throw BudgetExceeded("cannot order terms " + std::to_string(*best_index_) +
                           " and " + std::to_string(term.index) +
                           " without their values");
    }
  }
  if (better) {
    best_index_ = term.index;
    best_base_ = term.rep.base();
    best_value_ = term.value;
    since_best_ = {};
  }
  last_class_ = term.step_class;
  last_index_ = term.index;
}

Base LargestTermTracker::base() const {
  if (!best_base_) throw Error("no terms observed");
  return *best_base_;
}

std::uint64_t LargestTermTracker::index() const {
  if (!best_index_) throw Error("no terms observed");
  return *best_index_;
}

Base largest_term_base(std::span<const SeqTerm> prefix) {
  LargestTermTracker tracker;
  for (const SeqTerm& t : prefix) tracker.observe(t);
  return tracker.base();
}

Natural functional_eval(const SeqSpec& spec, std::uint64_t n, Base x,
                        const Budget& budget) {
  if (n == 0) throw Error("terms are numbered from 1");
  Budget b = budget;
  b.max_steps = n;
  std::optional<HereditaryRep> rep;
  Outcome outcome = walk(spec, b, [&](const SeqTerm& t) {
    if (t.index == n) rep = t.rep;
  });
  if (!rep) {
    if (outcome.kind == Outcome::Kind::kBudgetExceeded) {
      throw BudgetExceeded(outcome.detail);
    }
    throw Error("the sequence has no term " + std::to_string(n));
  }
  return rebase(*rep, x, budget);
}

PhaseProfile phase_profile(std::span<const SeqTerm> terms) {
  PhaseProfile profile;
  auto extend = [](std::optional<StepRange>& r, std::uint64_t index) {
    if (!r) {
      r = StepRange{index, index};
    } else {
      r->last = index;
    }
  };
  int phase = 0;
  for (const SeqTerm& t : terms) {
    if (!t.step_class) {
      profile.terminated_at = t.index;
      break;
    }
    const int p = static_cast<int>(*t.step_class == StepClass::kIncrease   ? 0
                                   : *t.step_class == StepClass::kPlateau ? 1
                                                                           : 2);
    if (p < phase) throw OscillationDetected(t.index);
    phase = p;
    switch (*t.step_class) {
      case StepClass::kIncrease:
        extend(profile.increase, t.index);
        break;
      case StepClass::kPlateau:
        extend(profile.plateau, t.index);
        break;
      case StepClass::kDescent:
        extend(profile.descent, t.index);
        break;
    }
  }
  if (profile.terminated_at && *profile.terminated_at % 2 == 0) {
    profile.n1 = *profile.terminated_at / 2;
  }
  return profile;
}

}  // namespace goodstein
