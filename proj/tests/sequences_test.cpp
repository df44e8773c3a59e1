#include "goodstein/sequences.hpp"

#include <gtest/gtest.h>

#include "goodstein/errors.hpp"
#include "goodstein/notation.hpp"
#include "oracle/naive_goodstein.hpp"
#include "test_support.hpp"

namespace goodstein {
namespace {

using testing::C;
using testing::K;
using testing::naturals;
using testing::R;
using testing::T;
using testing::values_of;

Budget steps(std::uint64_t n) {
  Budget b;
  b.max_steps = n;
  return b;
}

TEST(StepTest, Examples) {
  Budget budget;
  auto two = goodstein_step(make_term(1, decompose(2, Base(2)), budget));
  EXPECT_EQ(two.index, 2u);
  EXPECT_EQ(two.rep, R(3, C(2)));
  EXPECT_EQ(two.value, 2);

  auto three = goodstein_step(make_term(1, decompose(3, Base(2)), budget));
  EXPECT_EQ(three.rep, R(3, T({{1, C(1)}})));
  EXPECT_EQ(three.value, 3);

  auto four = goodstein_step(make_term(1, decompose(4, Base(2)), budget));
  EXPECT_EQ(four.value, 26);
  EXPECT_EQ(four.rep.base(), Base(3));
}

TEST(StepTest, ZeroUnderflows) {
  EXPECT_THROW(goodstein_step(make_term(4, HereditaryRep(Base(5)), {})),
               Underflow);
}

TEST(GenerateTest, GoldenSequences) {
  auto g1 = generate(SeqSpec::goodstein(1));
  EXPECT_EQ(values_of(g1), naturals({1, 0}));
  EXPECT_EQ(to_string(g1.outcome), "Terminated(2)");

  auto g2 = generate(SeqSpec::goodstein(2));
  EXPECT_EQ(values_of(g2), naturals({2, 2, 1, 0}));
  EXPECT_EQ(to_string(g2.outcome), "Terminated(4)");

  auto g3 = generate(SeqSpec::goodstein(3));
  EXPECT_EQ(values_of(g3), naturals({3, 3, 3, 2, 1, 0}));
  EXPECT_EQ(to_string(g3.outcome), "Terminated(6)");
}

TEST(GenerateTest, SeedZeroIsAlreadyZero) {
  auto g0 = generate(SeqSpec::goodstein(0));
  EXPECT_EQ(values_of(g0), naturals({0}));
  EXPECT_EQ(to_string(g0.outcome), "Terminated(1)");
}

TEST(GenerateTest, FourHitsStepLimit) {
  auto g4 = generate(SeqSpec::goodstein(4), steps(6));
  EXPECT_EQ(values_of(g4), naturals({4, 26, 41, 60, 83, 109}));
  EXPECT_EQ(to_string(g4.outcome), "StepLimit");
}

TEST(GenerateTest, MatchesOracle) {
  // From 16 on the values tower quickly; the oracle multiplies naively.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::uint64_t n = seed < 16 ? 12 : 4;
    auto expected = oracle::goodstein_values(seed, n);
    auto seq = generate(SeqSpec::goodstein(seed), steps(n));
    ASSERT_EQ(seq.terms.size(), expected.size()) << seed;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(to_decimal(*seq.terms[i].value), expected[i].to_string())
          << "seed " << seed << " term " << i + 1;
    }
  }
  for (std::uint32_t k = 2; k <= 6; ++k) {
    auto expected = oracle::l_values(k, 8);
    auto seq = generate(SeqSpec::l_sequence(k), steps(8));
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(to_decimal(*seq.terms[i].value), expected[i].to_string())
          << "k " << k << " term " << i + 1;
    }
  }
}

TEST(GenerateTest, LTwoCoincidesWithGFour) {
  auto l2 = generate(SeqSpec::l_sequence(2), steps(3));
  EXPECT_EQ(values_of(l2), naturals({4, 26, 41}));
  auto g4 = generate(SeqSpec::goodstein(4), steps(200));
  l2 = generate(SeqSpec::l_sequence(2), steps(200));
  ASSERT_EQ(l2.terms.size(), g4.terms.size());
  for (std::size_t i = 0; i < g4.terms.size(); ++i) {
    EXPECT_EQ(l2.terms[i].rep, g4.terms[i].rep);
  }
}

TEST(GenerateTest, BaseLaw) {
  for (auto spec : {SeqSpec::goodstein(3), SeqSpec::goodstein(11),
                    SeqSpec::l_sequence(5)}) {
    auto seq = generate(spec, steps(50));
    for (const auto& t : seq.terms) {
      EXPECT_EQ(t.rep.base().value(), spec.start_base().value() + t.index - 1);
    }
  }
}

TEST(GenerateTest, ValuesElidedOverDigitBudget) {
  Budget b = steps(8);
  b.max_digits = 30;
  auto seq = generate(SeqSpec::goodstein(16), b);
  ASSERT_EQ(seq.terms.size(), 8u);
  EXPECT_EQ(seq.terms[1].value, Natural("7625597484986"));
  EXPECT_TRUE(seq.terms[2].value.has_value());   // about 2*4^42
  EXPECT_FALSE(seq.terms[3].value.has_value());  // about 2*5^62
}

TEST(GenerateTest, BorrowBudgetStopsCleanly) {
  // G(19) borrows 8^8 terms at step 6.
  auto seq = generate(SeqSpec::goodstein(19), steps(100));
  EXPECT_EQ(seq.outcome.kind, Outcome::Kind::kBudgetExceeded);
  EXPECT_EQ(seq.terms.size(), 6u);
  EXPECT_NE(seq.outcome.detail.find("16777216"), std::string::npos);
}

TEST(GenerateTest, RejectsInvalidSpecs) {
  EXPECT_THROW(generate(SeqSpec::l_sequence(1)), Error);
  EXPECT_THROW(generate(SeqSpec::goodstein(-1)), Error);
  Budget zero;
  zero.max_steps = 0;
  EXPECT_THROW(generate(SeqSpec::goodstein(3), zero), Error);
}

TEST(WalkTest, StreamsTheSameTerms) {
  auto stored = generate(SeqSpec::goodstein(13), steps(40));
  std::vector<SeqTerm> streamed;
  auto outcome = walk(SeqSpec::goodstein(13), steps(40),
                      [&](const SeqTerm& t) { streamed.push_back(t); });
  EXPECT_EQ(to_string(outcome), to_string(stored.outcome));
  ASSERT_EQ(streamed.size(), stored.terms.size());
  for (std::size_t i = 0; i < streamed.size(); ++i) {
    EXPECT_EQ(streamed[i].rep, stored.terms[i].rep);
  }
}

TEST(WalkTest, FromMidway) {
  auto seq = generate(SeqSpec::goodstein(3));
  std::vector<std::uint64_t> seen;
  auto outcome = walk_from(seq.terms[2], {},
                           [&](const SeqTerm& t) { seen.push_back(t.index); });
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{3, 4, 5, 6}));
  EXPECT_EQ(to_string(outcome), "Terminated(6)");
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_step(decompose(4, Base(2))), StepClass::kIncrease);
  EXPECT_EQ(classify_step(decompose(2, Base(2))), StepClass::kPlateau);
  EXPECT_EQ(classify_step(decompose(3, Base(2))), StepClass::kPlateau);
  EXPECT_EQ(classify_step(R(5, C(3))), StepClass::kDescent);
  EXPECT_EQ(classify_step(R(5, T({{2, C(1)}}))), StepClass::kIncrease);
  EXPECT_THROW(classify_step(HereditaryRep(Base(3))), Underflow);
}

TEST(PredictTest, Examples) {
  Budget budget;
  EXPECT_EQ(predict_termination(make_term(1, decompose(3, Base(2)), budget)), 6);
  EXPECT_EQ(predict_termination(make_term(1, decompose(2, Base(2)), budget)), 4);
  EXPECT_EQ(predict_termination(make_term(1, decompose(4, Base(2)), budget)),
            std::nullopt);
  EXPECT_EQ(predict_termination(make_term(4, R(5, C(2)), budget)), 6);
  EXPECT_EQ(predict_termination(make_term(6, HereditaryRep(Base(7)), budget)),
            std::nullopt);
}

TEST(PredictTest, AgreesWithSimulationOffTheGoodsteinLine) {
  // A plateau term whose base is not index + 1, as in L sequences.
  auto start = make_term(3, R(9, T({{1, C(1)}, {4, K()}})), {});
  auto predicted = predict_termination(start);
  ASSERT_TRUE(predicted);
  auto outcome = walk_from(start, {}, [](const SeqTerm&) {});
  EXPECT_EQ(Natural(outcome.terminated_at), *predicted);
}

TEST(LargestTermTest, Examples) {
  auto g2 = generate(SeqSpec::goodstein(2));
  EXPECT_EQ(largest_term_base(g2.terms), Base(2));
  auto g4 = generate(SeqSpec::goodstein(4), steps(5));
  EXPECT_EQ(largest_term_base(g4.terms), Base(6));
  EXPECT_EQ(largest_term_base(std::span(g4.terms).first(1)), Base(2));
  EXPECT_THROW(largest_term_base({}), Error);
}

TEST(LargestTermTest, ElidedValuesOrderedStructurally) {
  Budget b = steps(40);
  b.max_digits = 3;
  auto g4 = generate(SeqSpec::goodstein(4), b);
  Budget full = steps(40);
  auto exact = generate(SeqSpec::goodstein(4), full);
  EXPECT_EQ(largest_term_base(g4.terms), largest_term_base(exact.terms));
  EXPECT_EQ(largest_term_base(g4.terms), Base(41));
}

TEST(FunctionalTest, Examples) {
  EXPECT_EQ(functional_eval(SeqSpec::goodstein(3), 1, Base(5)), 6);
  EXPECT_EQ(functional_eval(SeqSpec::goodstein(3), 2, Base(5)), 5);
  EXPECT_EQ(functional_eval(SeqSpec::goodstein(77), 1, Base(2)), 77);
  EXPECT_THROW(functional_eval(SeqSpec::goodstein(3), 7, Base(5)), Error);
}

TEST(PhaseProfileTest, Examples) {
  auto p3 = phase_profile(generate(SeqSpec::goodstein(3)).terms);
  EXPECT_FALSE(p3.increase);
  EXPECT_EQ(p3.plateau, (StepRange{1, 2}));
  EXPECT_EQ(p3.descent, (StepRange{3, 5}));
  EXPECT_EQ(p3.terminated_at, 6u);
  EXPECT_EQ(p3.n1, 3u);

  auto p1 = phase_profile(generate(SeqSpec::goodstein(1)).terms);
  EXPECT_FALSE(p1.increase);
  EXPECT_FALSE(p1.plateau);
  EXPECT_EQ(p1.descent, (StepRange{1, 1}));
  EXPECT_EQ(p1.terminated_at, 2u);

  auto p4 = phase_profile(generate(SeqSpec::goodstein(4), steps(5)).terms);
  EXPECT_EQ(p4.increase, (StepRange{1, 5}));
  EXPECT_FALSE(p4.plateau);
  EXPECT_FALSE(p4.terminated_at);
}

TEST(PhaseProfileTest, OscillationIsReported) {
  Budget budget;
  std::vector<SeqTerm> terms{make_term(1, R(5, C(3)), budget),
                             make_term(2, R(6, T({{2, C(1)}})), budget)};
  try {
    phase_profile(terms);
    FAIL() << "expected OscillationDetected";
  } catch (const OscillationDetected& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

// Properties.

TEST(SequenceProperty, TrichotomyOnSmallSeeds) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto seq = generate(SeqSpec::goodstein(seed), steps(300));
    for (std::size_t i = 0; i + 1 < seq.terms.size(); ++i) {
      const auto& a = seq.terms[i];
      const auto& b = seq.terms[i + 1];
      if (!a.value || !b.value) continue;
      switch (*a.step_class) {
        case StepClass::kDescent:
          EXPECT_EQ(*b.value, *a.value - 1) << seed << " " << a.index;
          break;
        case StepClass::kPlateau:
          EXPECT_EQ(*b.value, *a.value) << seed << " " << a.index;
          break;
        case StepClass::kIncrease:
          EXPECT_GT(*b.value, *a.value) << seed << " " << a.index;
          break;
      }
    }
    EXPECT_NO_THROW(phase_profile(seq.terms)) << seed;
  }
}

TEST(SequenceProperty, TerminalLadder) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto seq = generate(SeqSpec::goodstein(seed));
    ASSERT_TRUE(seq.terminated());
    auto profile = phase_profile(seq.terms);
    const auto n = seq.outcome.terminated_at;
    for (auto k = profile.descent->first; k < n; ++k) {
      EXPECT_EQ(*seq.terms[k - 1].value, n - k);
    }
  }
}

TEST(SequenceProperty, FunctionalDecreaseWhereCoefficientsFit) {
  // Strict decrease of m_n(x) once x exceeds every coefficient of both
  // the n-th and the (n+1)-th rep.
  auto max_coeff = [](const Tree& t, auto&& self) -> std::uint64_t {
    std::uint64_t m = 0;
    for (const Term& term : t.terms()) {
      m = std::max({m, term.coeff, self(term.exponent, self)});
    }
    return m;
  };
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    Budget b = steps(30);
    b.max_digits = 2000;
    auto seq = generate(SeqSpec::goodstein(seed), b);
    for (std::size_t i = 0; i + 1 < seq.terms.size(); ++i) {
      const auto& a = seq.terms[i].rep;
      const auto& c = seq.terms[i + 1].rep;
      const auto bound = std::max(max_coeff(a.tree(), max_coeff),
                                  max_coeff(c.tree(), max_coeff));
      for (std::uint64_t x = std::max<std::uint64_t>(3, bound + 1); x <= 10; ++x) {
        Natural va, vc;
        try {
          va = rebase(a, Base(x), b);
          vc = rebase(c, Base(x), b);
        } catch (const BudgetExceeded&) {
          continue;
        }
        EXPECT_GT(va, vc) << seed << " " << i + 1 << " " << x;
      }
    }
  }
}

}  // namespace
}  // namespace goodstein
