#include "goodstein/claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>

#include "goodstein/errors.hpp"
#include "goodstein/notation.hpp"

namespace goodstein {

namespace {

constexpr std::array kCatalog = {
    ClaimId::kLemma1, ClaimId::kLemma2, ClaimId::kLemma3, ClaimId::kLemma4,
    ClaimId::kLemma5, ClaimId::kLemma6, ClaimId::kLemma7, ClaimId::kLemma8,
    ClaimId::kCor61,  ClaimId::kCor71,  ClaimId::kThm1,   ClaimId::kThm2,
    ClaimId::kThm3,   ClaimId::kThesis, ClaimId::kSec9,
};

constexpr std::array<std::string_view, kCatalog.size()> kNames = {
    "lemma1", "lemma2", "lemma3", "lemma4", "lemma5",
    "lemma6", "lemma7", "lemma8", "cor61",  "cor71",
    "thm1",   "thm2",   "thm3",   "thesis", "sec9",
};

// How far thm2 may simulate past the budget to confirm a prediction.
constexpr std::uint64_t kFastForwardFactor = 10;

std::string str(std::uint64_t v) { return std::to_string(v); }

// Thrown when a value the check needs was elided; reported as Unresolved.
struct Elided {
  std::uint64_t index;
};

const SeqTerm& term_at(const Sequence& s, std::uint64_t index) {
  return s.terms.at(index - 1);
}

const Natural& need_value(const Sequence& s, std::uint64_t index) {
  const auto& v = term_at(s, index).value;
  if (!v) throw Elided{index};
  return *v;
}

template <typename F>
Verdict guarded(F&& check) {
  try {
    return check();
  } catch (const Elided& e) {
    return Verdict::unresolved("value of term " + str(e.index) +
                               " is over the digit budget");
  }
}

Witness term_witness(const Sequence& s, std::uint64_t index, std::uint64_t count,
                     std::string note) {
  Witness w{index, {}, std::nullopt, std::move(note)};
  for (std::uint64_t i = 0; i < count; ++i) w.values.push_back(need_value(s, index + i));
  return w;
}

// Checks that apply only to a G(m) that reached 0 within budget.
std::optional<Verdict> needs_terminated_g(const Sequence& s) {
  if (s.spec.kind != SeqKind::kG) {
    return Verdict::not_applicable("concerns Goodstein sequences G(m) only");
  }
  if (!s.terminated()) {
    return Verdict::not_applicable("did not terminate within budget (" +
                                   to_string(s.outcome) + ")");
  }
  return std::nullopt;
}

// c * b^1 in base b.
bool is_linear(const HereditaryRep& r, std::uint64_t coeff, std::uint64_t base) {
  if (r.base().value() != base || r.tree().size() != 1) return false;
  const Term& t = r.tree().leading();
  auto e = t.exponent.terms();
  return t.coeff == coeff && e.size() == 1 && e[0].coeff == 1 &&
         e[0].exponent.is_zero();
}

std::string linear_text(std::uint64_t coeff, std::uint64_t base) {
  return str(coeff) + "*" + str(base) + "^(1)";
}

// n = 2(2*n2 + 1) with n2 >= 1.
std::optional<std::uint64_t> lemma7_n2(std::uint64_t n) {
  if (n % 2 != 0 || (n / 2) % 2 != 1 || n / 2 < 3) return std::nullopt;
  return (n / 2 - 1) / 2;
}

enum class Expect { kGreater, kEqual, kLess, kAtLeast };

std::string_view expect_text(Expect e) {
  switch (e) {
    case Expect::kGreater:
      return "an increase";
    case Expect::kEqual:
      return "an equal value";
    case Expect::kLess:
      return "a decrease";
    case Expect::kAtLeast:
      return "no decrease";
  }
  return "?";
}

bool meets(Expect e, const Natural& now, const Natural& next) {
  switch (e) {
    case Expect::kGreater:
      return next > now;
    case Expect::kEqual:
      return next == now;
    case Expect::kLess:
      return next < now;
    case Expect::kAtLeast:
      return next >= now;
  }
  return false;
}

// Every step whose rep satisfies the hypothesis (nullopt = no match) must
// move the value as expected.
Verdict check_steps(
    const Sequence& s,
    const std::function<std::optional<Expect>(const HereditaryRep&)>& hypothesis) {
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
    const SeqTerm& now = s.terms[i];
    const SeqTerm& next = s.terms[i + 1];
    if (!now.value || !next.value) continue;
    ++examined;
    auto expect = hypothesis(now.rep);
    if (!expect) continue;
    ++matched;
    if (!meets(*expect, *now.value, *next.value)) {
      return Verdict::fails(
          term_witness(s, now.index, 2,
                       "rep " + format(now.rep) + " should give " +
                           std::string(expect_text(*expect))),
          examined);
    }
  }
  if (matched == 0) {
    Verdict v = Verdict::not_applicable("no examined step matches the hypothesis");
    v.steps_examined = examined;
    return v;
  }
  return Verdict::holds(examined, str(matched) + " matching steps");
}

const HereditaryRep* single_term(const HereditaryRep& r) {
  return r.tree().size() == 1 ? &r : nullptr;
}

}  // namespace

std::span<const ClaimId> all_claims() { return kCatalog; }

std::string_view to_string(ClaimId id) {
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<ClaimId> parse_claim_id(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return kCatalog[i];
  }
  return std::nullopt;
}

Verdict Verdict::holds(std::uint64_t examined, std::string note) {
  return {Kind::kHolds, std::move(note), std::nullopt, examined};
}

Verdict Verdict::fails(Witness w, std::uint64_t examined, std::string note) {
  if (note.empty()) note = w.note;
  return {Kind::kFails, std::move(note), std::move(w), examined};
}

Verdict Verdict::not_applicable(std::string reason) {
  return {Kind::kNotApplicable, std::move(reason), std::nullopt, 0};
}

Verdict Verdict::unresolved(std::string reason, std::uint64_t examined) {
  return {Kind::kUnresolved, std::move(reason), std::nullopt, examined};
}

std::string_view to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kHolds:
      return "Holds";
    case Verdict::Kind::kFails:
      return "Fails";
    case Verdict::Kind::kNotApplicable:
      return "NotApplicable";
    case Verdict::Kind::kUnresolved:
      return "Unresolved";
  }
  return "?";
}

Verdict check_lemma1(const Sequence& s) {
  return guarded([&] {
    if (auto na = needs_terminated_g(s)) return *na;
    if (s.spec.seed <= 3) return Verdict::not_applicable("needs seed m > 3");
    const std::uint64_t n = s.outcome.terminated_at;
    for (std::uint64_t k = 2; k < n; ++k) {
      if (need_value(s, k) < need_value(s, k - 1)) {
        return Verdict::holds(k, "first decrease at term " + str(k));
      }
    }
    return Verdict::fails(term_witness(s, 1, n, "no decrease before term " + str(n)),
                          n);
  });
}

Verdict check_lemma2(const Sequence& s) {
  return check_steps(s, [](const HereditaryRep& r) -> std::optional<Expect> {
    if (r.tree().size() >= 2) return Expect::kAtLeast;
    return std::nullopt;
  });
}

Verdict check_lemma3(const Sequence& s) {
  return check_steps(s, [](const HereditaryRep& r) -> std::optional<Expect> {
    if (!single_term(r) || r.tree().leading().coeff < 2) return std::nullopt;
    return r.tree().leading().exponent.is_zero() ? Expect::kLess
                                                 : Expect::kGreater;
  });
}

Verdict check_lemma4(const Sequence& s) {
  return check_steps(s, [](const HereditaryRep& r) -> std::optional<Expect> {
    if (!single_term(r) || r.tree().leading().coeff != 1) return std::nullopt;
    // l >= b exactly when l itself has a term with a positive exponent.
    const Tree& l = r.tree().leading().exponent;
    if (l.is_zero() || l.leading().exponent.is_zero()) return std::nullopt;
    return Expect::kGreater;
  });
}

Verdict check_lemma5(const Sequence& s) {
  return check_steps(s, [](const HereditaryRep& r) -> std::optional<Expect> {
    if (!single_term(r) || r.tree().leading().coeff != 1) return std::nullopt;
    const Tree& l = r.tree().leading().exponent;
    if (l.is_zero()) return Expect::kLess;
    if (!l.leading().exponent.is_zero()) return std::nullopt;  // l >= b
    return l.leading().coeff == 1 ? Expect::kEqual : Expect::kGreater;
  });
}

Verdict check_lemma6(const Sequence& s) {
  return guarded([&] {
    if (auto na = needs_terminated_g(s)) return *na;
    const std::uint64_t n = s.outcome.terminated_at;
    if (n % 2 != 0) {
      return Verdict::fails(term_witness(s, n, 1, "n = " + str(n) + " is odd"), n);
    }
    const std::uint64_t n1 = n / 2;
    if (n1 == 1) return Verdict::not_applicable("n1 = 1 refers to term 0");
    const SeqTerm& t = term_at(s, n1 - 1);
    if (!is_linear(t.rep, 1, n1)) {
      return Verdict::fails(
          term_witness(s, n1 - 1, 1,
                       "term " + str(n1 - 1) + " is " + format(t.rep) + ", not " +
                           linear_text(1, n1)),
          n);
    }
    return Verdict::holds(n, "n = " + str(n) + ", n1 = " + str(n1));
  });
}

Verdict check_cor61(const Sequence& s) {
  return guarded([&] {
    if (auto na = needs_terminated_g(s)) return *na;
    const std::uint64_t n = s.outcome.terminated_at;
    if (n % 2 != 0) return Verdict::not_applicable("n is odd, so n1 is undefined");
    const std::uint64_t n1 = n / 2;
    if (n1 == 1) return Verdict::not_applicable("n1 = 1 refers to term 0");
    for (std::uint64_t k = n1; k < n; ++k) {
      if (need_value(s, k) != n - k) {
        return Verdict::fails(
            term_witness(s, k, 1, "term " + str(k) + " should be " + str(n - k)), n);
      }
    }
    return Verdict::holds(n, "ladder from term " + str(n1));
  });
}

Verdict check_lemma7(const Sequence& s) {
  return guarded([&] {
    if (auto na = needs_terminated_g(s)) return *na;
    const std::uint64_t n = s.outcome.terminated_at;
    auto n2 = lemma7_n2(n);
    if (!n2) {
      return Verdict::fails(
          term_witness(s, n, 1,
                       "n = " + str(n) + " is not 2(2*n2+1) for a natural n2 >= 1"),
          n);
    }
    if (*n2 >= 2) {
      const SeqTerm& t = term_at(s, *n2 - 1);
      if (!is_linear(t.rep, 2, *n2)) {
        return Verdict::fails(
            term_witness(s, *n2 - 1, 1,
                         "term " + str(*n2 - 1) + " is " + format(t.rep) +
                             ", not " + linear_text(2, *n2)),
            n);
      }
    }
    return Verdict::holds(n, "n = " + str(n) + ", n2 = " + str(*n2));
  });
}

Verdict check_cor71(const Sequence& s) {
  return guarded([&] {
    if (auto na = needs_terminated_g(s)) return *na;
    const std::uint64_t n = s.outcome.terminated_at;
    auto n2 = lemma7_n2(n);
    if (!n2) return Verdict::not_applicable("n is not of the form 2(2*n2+1)");
    for (std::uint64_t k = *n2; k < 2 * *n2; ++k) {
      if (need_value(s, k) != need_value(s, k + 1)) {
        return Verdict::fails(
            term_witness(s, k, 2, "terms " + str(k) + " and " + str(k + 1) +
                                      " should be equal"),
            n);
      }
    }
    return Verdict::holds(n, "plateau from term " + str(*n2));
  });
}

Verdict check_thm1(const Sequence& s) {
  return guarded([&] {
    if (auto na = needs_terminated_g(s)) return *na;
    const std::uint64_t n = s.outcome.terminated_at;
    auto n2 = lemma7_n2(n);
    if (!n2) return Verdict::not_applicable("n is not of the form 2(2*n2+1)");
    for (std::uint64_t k = 1; k < *n2; ++k) {
      if (!(need_value(s, k) < need_value(s, k + 1))) {
        return Verdict::fails(term_witness(s, k, 2, "increase clause"), n);
      }
    }
    for (std::uint64_t k = *n2; k < 2 * *n2; ++k) {
      if (need_value(s, k) != need_value(s, k + 1)) {
        return Verdict::fails(term_witness(s, k, 2, "plateau clause"), n);
      }
    }
    for (std::uint64_t k = 2 * *n2 + 1; k <= n; ++k) {
      if (need_value(s, k) != n - k) {
        return Verdict::fails(term_witness(s, k, 1, "descent clause"), n);
      }
    }
    return Verdict::holds(n, "n2 = " + str(*n2));
  });
}

Verdict check_thm2(const Sequence& s) {
  return guarded([&] {
    const std::uint64_t examined = s.terms.size();
    if (s.terminated()) {
      Natural p = 0;
      for (std::uint64_t k = 1; k <= s.outcome.terminated_at; ++k) {
        p = std::max(p, need_value(s, k));
      }
      return Verdict::holds(examined, "terminated at term " +
                                          str(s.outcome.terminated_at) +
                                          ", bounded by " + to_decimal(p));
    }
    auto first = std::find_if(s.terms.begin(), s.terms.end(), [](const SeqTerm& t) {
      return t.step_class && *t.step_class != StepClass::kIncrease;
    });
    if (first == s.terms.end()) {
      return Verdict::unresolved("no plateau or descent within budget; no bound observed",
                                 examined);
    }
    auto predicted = predict_termination(*first);
    if (!predicted) throw Elided{first->index};
    const std::uint64_t cap = s.budget.max_steps * kFastForwardFactor;
    if (!predicted->fits_ulong_p() || predicted->get_ui() > cap) {
      return Verdict::unresolved("predicted termination at term " +
                                     to_decimal(*predicted) + " is beyond " + str(cap),
                                 examined);
    }
    Budget ff = s.budget;
    ff.max_steps = predicted->get_ui();
    auto outcome = walk_from(*first, ff, [](const SeqTerm&) {});
    if (outcome.kind == Outcome::Kind::kBudgetExceeded) {
      return Verdict::unresolved("fast-forward stopped: " + outcome.detail, examined);
    }
    if (outcome.kind != Outcome::Kind::kTerminated ||
        outcome.terminated_at != predicted->get_ui()) {
      return Verdict::fails(
          term_witness(s, first->index, 1,
                       "predicted 0 at term " + to_decimal(*predicted) + ", got " +
                           to_string(outcome)),
          examined);
    }
    return Verdict::holds(examined, "bounded from term " + str(first->index) +
                                        "; reaches 0 at term " +
                                        to_decimal(*predicted));
  });
}

Lemma8Thm3 check_lemma8_thm3(const Sequence& g) {
  Lemma8Thm3 result;
  if (g.spec.kind == SeqKind::kL) {
    result.thm3 = Verdict::not_applicable("compares L(k) against a sequence G(m)");
    result.lemma8 =
        g.terminated()
            ? Verdict::holds(g.terms.size(), "reached 0 at term " +
                                                 str(g.outcome.terminated_at))
            : Verdict::unresolved(
                  "did not reach 0 within budget; termination of L(k) is out of "
                  "desk range",
                  g.terms.size());
    return result;
  }
  if (!g.terminated()) {
    result.thm3 = result.lemma8 = Verdict::not_applicable(
        "G(m) did not terminate within budget (" + to_string(g.outcome) + ")");
    return result;
  }
  const std::uint64_t n = g.outcome.terminated_at;
  result.thm3 = guarded([&] {
    Natural p = 0;
    for (std::uint64_t i = 1; i <= n; ++i) p = std::max(p, need_value(g, i));
    const Natural k_big = std::max(Natural(n), p);
    if (!k_big.fits_ulong_p() || k_big < 2) {
      return Verdict::unresolved("k = " + to_decimal(k_big) + " is out of range");
    }
    const std::uint64_t k = k_big.get_ui();
    result.k = k;
    Budget b = g.budget;
    b.max_steps = n;
    const Sequence l = generate(SeqSpec::l_sequence(k), b);
    for (std::uint64_t i = 1; i <= n; ++i) {
      const Natural& gv = need_value(g, i);
      if (gv == 0) continue;
      if (i > l.terms.size()) {
        return Verdict::unresolved("L(" + str(k) + ") stopped before term " + str(i));
      }
      const auto& lv = l.terms[i - 1].value;
      if (!lv) {
        return Verdict::unresolved("L(" + str(k) + ") term " + str(i) +
                                   " is over the digit budget");
      }
      if (!(*lv > gv)) {
        return Verdict::fails(Witness{i, {*lv, gv}, std::nullopt,
                                      "L(" + str(k) + ") does not dominate at term " +
                                          str(i)},
                              n);
      }
    }
    return Verdict::holds(n, "k = max(n, p) = " + str(k));
  });
  if (result.k) {
    result.lemma8 = Verdict::unresolved(
        "termination of L(" + str(*result.k) + ") is out of desk range", n);
  } else {
    result.lemma8 = Verdict::unresolved("no k was constructed", n);
  }
  return result;
}

Lemma8Thm3 check_lemma8_thm3(const Natural& m, const Budget& budget) {
  return check_lemma8_thm3(generate(SeqSpec::goodstein(m), budget));
}

ThesisCheck check_thesis(const Sequence& s, std::span<const Base> bases) {
  ThesisCheck result;
  LargestTermTracker tracker;
  try {
    for (const SeqTerm& t : s.terms) {
      tracker.observe(t);
      result.u_trajectory.push_back(tracker.base().value());
    }
  } catch (const BudgetExceeded&) {
    // The trajectory stops where terms can no longer be ordered.
  }
  if (result.u_trajectory.empty()) {
    result.limit_behaviour = "unknown";
  } else {
    const std::uint64_t last = result.u_trajectory.back();
    const auto first_last =
        std::find(result.u_trajectory.begin(), result.u_trajectory.end(), last);
    const auto reached = static_cast<std::size_t>(first_last - result.u_trajectory.begin());
    result.limit_behaviour = 2 * reached < result.u_trajectory.size()
                                 ? "stabilized at " + str(last)
                                 : "growing";
  }
  if (bases.empty()) {
    result.verdict = Verdict::not_applicable("no candidate bases");
    return result;
  }
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> increasing;
  for (Base u : bases) {
    bool found = false;
    std::optional<Natural> previous;
    for (const SeqTerm& t : s.terms) {
      std::optional<Natural> current;
      try {
        current = rebase(t.rep, u, s.budget);
      } catch (const BudgetExceeded&) {
      }
      if (previous && current) {
        ++examined;
        if (*current <= *previous) {
          found = true;
          break;
        }
      }
      previous = std::move(current);
    }
    if (!found) increasing.push_back(u.value());
  }
  const std::string limit = "u_k " + result.limit_behaviour;
  if (!increasing.empty()) {
    std::string list;
    for (auto u : increasing) list += (list.empty() ? "" : ",") + str(u);
    result.verdict = Verdict::unresolved(
        "rebased to u = " + list + " the examined prefix strictly increases; " + limit,
        examined);
  } else {
    result.verdict = Verdict::holds(
        examined, "every base shows a non-increasing step; " + limit);
  }
  return result;
}

Verdict check_sec9(const Sequence& s, Base x) {
  const std::uint64_t xv = x.value();
  if (xv < 3) throw Error("the functional sequence is checked for x >= 3");
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
    const SeqTerm& now = s.terms[i];
    const SeqTerm& next = s.terms[i + 1];
    const Term& low = now.rep.tree().lowest();
    if (!(xv > low.coeff)) continue;
    Natural bound = 1;
    std::string clause = "clause (i)";
    if (!low.exponent.is_zero()) {
      // c * x^a with a > 0: the difference is at least (x - 2) * x^(a - 1).
      // m_n(x) >= x^a, so a bound over the digit budget means m_n(x) is too.
      auto a = value_u64(low.exponent, xv);
      if (!a || static_cast<double>(*a - 1) * std::log10(static_cast<double>(xv)) >
                    static_cast<double>(s.budget.max_digits)) {
        continue;
      }
      mpz_ui_pow_ui(bound.get_mpz_t(), xv, *a - 1);
      bound *= xv - 2;
      clause = "clause (ii)";
    }
    Natural m_now, m_next;
    try {
      m_now = rebase(now.rep, x, s.budget);
      m_next = rebase(next.rep, x, s.budget);
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++examined;
    const Natural diff = m_now - m_next;
    const bool ok = low.exponent.is_zero() ? diff == 1 : diff >= bound;
    if (!ok) {
      return Verdict::fails(
          Witness{now.index, {m_now, m_next, bound}, xv,
                  clause + " at x = " + str(xv) + ": m_n(x) - m_{n+1}(x) = " +
                      to_decimal(diff) + (low.exponent.is_zero() ? ", not " : " < ") +
                      to_decimal(bound)},
          examined);
    }
  }
  if (examined == 0) {
    return Verdict::not_applicable("no step at x = " + str(xv) +
                                   " meets a side condition");
  }
  return Verdict::holds(examined);
}

namespace {

std::vector<Base> default_bases() {
  std::vector<Base> out;
  for (std::uint64_t b = 3; b <= 10; ++b) out.emplace_back(b);
  return out;
}

Verdict check_sec9_all(const Sequence& s, std::span<const Base> xs) {
  std::uint64_t examined = 0;
  bool any = false;
  for (Base x : xs) {
    Verdict v = check_sec9(s, x);
    examined += v.steps_examined;
    if (v.kind == Verdict::Kind::kFails) {
      v.steps_examined = examined;
      return v;
    }
    any = any || v.kind == Verdict::Kind::kHolds;
  }
  if (!any) return Verdict::not_applicable("no step meets a side condition");
  return Verdict::holds(examined, "checked at x = " + str(xs.front().value()) +
                                      ".." + str(xs.back().value()));
}

}  // namespace

Verdict check_claim(ClaimId id, const Sequence& seq, const SuiteOptions& options) {
  switch (id) {
    case ClaimId::kLemma1:
      return check_lemma1(seq);
    case ClaimId::kLemma2:
      return check_lemma2(seq);
    case ClaimId::kLemma3:
      return check_lemma3(seq);
    case ClaimId::kLemma4:
      return check_lemma4(seq);
    case ClaimId::kLemma5:
      return check_lemma5(seq);
    case ClaimId::kLemma6:
      return check_lemma6(seq);
    case ClaimId::kLemma7:
      return check_lemma7(seq);
    case ClaimId::kLemma8:
      return check_lemma8_thm3(seq).lemma8;
    case ClaimId::kCor61:
      return check_cor61(seq);
    case ClaimId::kCor71:
      return check_cor71(seq);
    case ClaimId::kThm1:
      return check_thm1(seq);
    case ClaimId::kThm2:
      return check_thm2(seq);
    case ClaimId::kThm3:
      return check_lemma8_thm3(seq).thm3;
    case ClaimId::kThesis: {
      const auto bases =
          options.thesis_bases.empty() ? default_bases() : options.thesis_bases;
      return check_thesis(seq, bases).verdict;
    }
    case ClaimId::kSec9: {
      const auto xs = options.sec9_bases.empty() ? default_bases() : options.sec9_bases;
      return check_sec9_all(seq, xs);
    }
  }
  throw Error("unknown claim");
}

std::vector<ClaimReport> run_suite(std::span<const Sequence> sequences,
                                   std::span<const ClaimId> claims,
                                   const SuiteOptions& options) {
  std::vector<ClaimReport> reports;
  for (const Sequence& seq : sequences) {
    for (ClaimId id : claims) {
      const auto start = std::chrono::steady_clock::now();
      Verdict v;
      try {
        v = check_claim(id, seq, options);
      } catch (const std::exception& e) {
        v = Verdict::unresolved(e.what());
      }
      reports.push_back({id, seq.spec, seq.budget, std::move(v),
                         std::chrono::steady_clock::now() - start});
    }
  }
  return reports;
}

std::vector<ClaimReport> run_suite(std::span<const SeqSpec> instances,
                                   std::span<const ClaimId> claims,
                                   const Budget& budget,
                                   const SuiteOptions& options) {
  std::vector<ClaimReport> reports;
  for (const SeqSpec& spec : instances) {
    if (claims.empty()) break;
    try {
      const Sequence seq = generate(spec, budget);
      auto part = run_suite(std::span(&seq, 1), claims, options);
      std::move(part.begin(), part.end(), std::back_inserter(reports));
    } catch (const std::exception& e) {
      for (ClaimId id : claims) {
        reports.push_back({id, spec, budget, Verdict::unresolved(e.what()), {}});
      }
    }
  }
  return reports;
}

bool replay_failure(ClaimId id, const Sequence& seq, const Verdict& verdict,
                    const SuiteOptions& options) {
  if (verdict.kind != Verdict::Kind::kFails || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  Verdict again;
  try {
    again = check_claim(id, seq, options);
  } catch (const std::exception&) {
    return false;
  }
  if (again.kind != Verdict::Kind::kFails || again.witness != w) return false;
  if (id == ClaimId::kThm3) return true;
  if (w.base) {
    // Rebased values of terms index and index + 1.
    if (w.values.size() < 2 || w.index + 1 > seq.terms.size()) return false;
    try {
      return rebase(term_at(seq, w.index).rep, Base(*w.base), seq.budget) ==
                 w.values[0] &&
             rebase(term_at(seq, w.index + 1).rep, Base(*w.base), seq.budget) ==
                 w.values[1];
    } catch (const Error&) {
      return false;
    }
  }
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const std::uint64_t index = w.index + i;
    if (index == 0 || index > seq.terms.size()) return false;
    const auto& v = term_at(seq, index).value;
    if (!v || *v != w.values[i]) return false;
  }
  return true;
}

}  // namespace goodstein
