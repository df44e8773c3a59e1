#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "goodstein/claims.hpp"
#include "goodstein/errors.hpp"
#include "goodstein/export.hpp"
#include "test_support.hpp"

namespace goodstein {
namespace {

using testing::naturals;
using Kind = Verdict::Kind;

std::vector<SeqSpec> g123() {
  return {SeqSpec::goodstein(1), SeqSpec::goodstein(2), SeqSpec::goodstein(3)};
}

// A hand-built sequence; reps are the values in their term's base.
Sequence synthetic(Natural seed, std::uint64_t first_base,
                   std::initializer_list<unsigned long> values) {
  Sequence s{SeqSpec::goodstein(std::move(seed)), Budget{}, {}, {}};
  std::uint64_t index = 1;
  for (unsigned long v : values) {
    s.terms.push_back(make_term(index, decompose(v, Base(first_base + index - 1)), s.budget));
    ++index;
  }
  if (s.terms.back().rep.is_zero()) s.outcome = Outcome::terminated(index - 1);
  return s;
}

TEST(ClaimCatalog, NamesRoundTrip) {
  ASSERT_EQ(all_claims().size(), 15u);
  for (ClaimId id : all_claims()) EXPECT_EQ(parse_claim_id(to_string(id)), id);
  EXPECT_EQ(to_string(ClaimId::kCor61), "cor61");
  EXPECT_FALSE(parse_claim_id("lemma9"));
  EXPECT_EQ(to_string(Kind::kNotApplicable), "NotApplicable");
}

// Derived by hand from G(1) = 1, 0; G(2) = 2, 2, 1, 0; G(3) = 3, 3, 3, 2, 1, 0.
TEST(ClaimVerdicts, SmallSeedsTable) {
  const std::map<std::string, std::array<std::string, 3>> expected = {
      {"lemma1", {"NotApplicable", "NotApplicable", "NotApplicable"}},
      {"lemma2", {"NotApplicable", "NotApplicable", "Holds"}},
      {"lemma3", {"NotApplicable", "Holds", "Holds"}},
      {"lemma4", {"NotApplicable", "NotApplicable", "NotApplicable"}},
      {"lemma5", {"Holds", "Holds", "Holds"}},
      {"lemma6", {"NotApplicable", "Holds", "Holds"}},
      {"lemma7", {"Fails", "Fails", "Holds"}},
      {"lemma8", {"Unresolved", "Unresolved", "Unresolved"}},
      {"cor61", {"NotApplicable", "Holds", "Holds"}},
      {"cor71", {"NotApplicable", "NotApplicable", "Holds"}},
      {"thm1", {"NotApplicable", "NotApplicable", "Holds"}},
      {"thm2", {"Holds", "Holds", "Holds"}},
      {"thm3", {"Holds", "Holds", "Holds"}},
      {"thesis", {"Holds", "Holds", "Holds"}},
      {"sec9", {"Holds", "Holds", "Fails"}},
  };
  const auto specs = g123();
  const auto reports = run_suite(specs, all_claims(), Budget{});
  ASSERT_EQ(reports.size(), 45u);
  for (const auto& r : reports) {
    const auto m = r.spec.seed.get_ui();
    EXPECT_EQ(to_string(r.verdict.kind),
              expected.at(std::string(to_string(r.claim)))[m - 1])
        << "G(" << m << ") " << to_string(r.claim) << ": " << r.verdict.detail;
  }
}

TEST(ClaimVerdicts, MatchesFixtureByteForByte) {
  std::ifstream in(GOODSTEIN_FIXTURE_DIR "/claims_g123.json");
  ASSERT_TRUE(in) << "missing fixture";
  std::stringstream golden;
  golden << in.rdbuf();
  const auto specs = g123();
  EXPECT_EQ(reports_to_json(run_suite(specs, all_claims(), Budget{})), golden.str());
}

TEST(ClaimVerdicts, Deterministic) {
  const auto specs = g123();
  const auto a = reports_to_json(run_suite(specs, all_claims(), Budget{}));
  const auto b = reports_to_json(run_suite(specs, all_claims(), Budget{}));
  EXPECT_EQ(a, b);
}

TEST(ClaimVerdicts, EveryClaimAnswersEveryInstance) {
  std::vector<SeqSpec> specs;
  for (int m = 0; m <= 20; ++m) specs.push_back(SeqSpec::goodstein(m));
  for (std::uint64_t k = 2; k <= 5; ++k) specs.push_back(SeqSpec::l_sequence(k));
  Budget b;
  b.max_steps = 120;
  const auto reports = run_suite(specs, all_claims(), b);
  ASSERT_EQ(reports.size(), specs.size() * all_claims().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].claim, all_claims()[i % all_claims().size()]);
    EXPECT_FALSE(reports[i].verdict.detail.empty() &&
                 reports[i].verdict.kind != Kind::kHolds);
  }
}

TEST(ClaimVerdicts, BadInstanceBecomesUnresolved) {
  const std::vector<SeqSpec> specs = {SeqSpec{SeqKind::kL, 1}};
  const auto reports = run_suite(specs, all_claims(), Budget{});
  ASSERT_EQ(reports.size(), all_claims().size());
  for (const auto& r : reports) EXPECT_EQ(r.verdict.kind, Kind::kUnresolved);
}

TEST(ClaimVerdicts, TerminationClaimsNeedTermination) {
  Budget b;
  b.max_steps = 1000;
  const Sequence g4 = generate(SeqSpec::goodstein(4), b);
  for (auto check : {check_lemma1, check_lemma6, check_lemma7, check_cor61,
                     check_cor71, check_thm1}) {
    EXPECT_EQ(check(g4).kind, Kind::kNotApplicable);
  }
  const auto l8 = check_lemma8_thm3(g4);
  EXPECT_EQ(l8.thm3.kind, Kind::kNotApplicable);
  EXPECT_EQ(l8.lemma8.kind, Kind::kNotApplicable);
  EXPECT_EQ(check_thm2(g4).kind, Kind::kUnresolved);
  EXPECT_EQ(check_lemma4(g4).kind, Kind::kHolds);
}

TEST(ClaimVerdicts, LSequencesSkipTerminationClaims) {
  Budget b;
  b.max_steps = 200;
  const Sequence l3 = generate(SeqSpec::l_sequence(3), b);
  EXPECT_EQ(check_lemma6(l3).kind, Kind::kNotApplicable);
  EXPECT_EQ(check_thm1(l3).kind, Kind::kNotApplicable);
  const auto l8 = check_lemma8_thm3(l3);
  EXPECT_EQ(l8.lemma8.kind, Kind::kUnresolved);
  EXPECT_EQ(l8.thm3.kind, Kind::kNotApplicable);
  EXPECT_EQ(check_lemma2(l3).kind, Kind::kHolds);
}

TEST(Lemma1, DecreaseFound) {
  const Sequence s = synthetic(5, 2, {5, 7, 6, 0});
  const Verdict v = check_lemma1(s);
  EXPECT_EQ(v.kind, Kind::kHolds);
  EXPECT_EQ(v.steps_examined, 3u);
}

TEST(Lemma1, NoDecreaseIsAFailureWithTheWholePrefix) {
  const Sequence s = synthetic(5, 2, {5, 7, 9, 0});
  const Verdict v = check_lemma1(s);
  ASSERT_EQ(v.kind, Kind::kFails);
  EXPECT_EQ(v.witness->index, 1u);
  EXPECT_EQ(v.witness->values, naturals({5, 7, 9, 0}));
  EXPECT_TRUE(replay_failure(ClaimId::kLemma1, s, v));
}

TEST(Lemma2, MultiTermDecreaseFails) {
  // 4 = 1*3^1 + 1 followed by 3.
  const Sequence s = synthetic(4, 3, {4, 3});
  const Verdict v = check_lemma2(s);
  ASSERT_EQ(v.kind, Kind::kFails);
  EXPECT_EQ(v.witness->index, 1u);
  EXPECT_EQ(v.witness->values, naturals({4, 3}));
}

TEST(Lemma7, ShortSequenceWitness) {
  const Verdict v = check_lemma7(generate(SeqSpec::goodstein(1), Budget{}));
  ASSERT_EQ(v.kind, Kind::kFails);
  EXPECT_EQ(v.witness->index, 2u);
  EXPECT_EQ(v.witness->values, naturals({0}));
}

TEST(Lemma6, WrongMiddleTermFails) {
  // Terminates at n = 6 but term 2 is 2 in base 3, not 1*3^1.
  const Sequence s = synthetic(3, 2, {3, 2, 3, 2, 1, 0});
  const Verdict v = check_lemma6(s);
  ASSERT_EQ(v.kind, Kind::kFails);
  EXPECT_EQ(v.witness->index, 2u);
  EXPECT_TRUE(replay_failure(ClaimId::kLemma6, s, v));
}

TEST(Thm2, FastForwardsToThePrediction) {
  Budget b;
  b.max_steps = 3;
  const Sequence s = generate(SeqSpec::goodstein(3), b);
  ASSERT_FALSE(s.terminated());
  const Verdict v = check_thm2(s);
  EXPECT_EQ(v.kind, Kind::kHolds) << v.detail;
  EXPECT_NE(v.detail.find("term 6"), std::string::npos) << v.detail;
}

TEST(Thm3, UsesMaxOfLengthAndPeak) {
  const auto r2 = check_lemma8_thm3(2, Budget{});
  EXPECT_EQ(r2.k, 4u);
  EXPECT_EQ(r2.thm3.kind, Kind::kHolds);
  const auto r3 = check_lemma8_thm3(3, Budget{});
  EXPECT_EQ(r3.k, 6u);
  EXPECT_EQ(r3.thm3.kind, Kind::kHolds);
  EXPECT_EQ(r3.lemma8.kind, Kind::kUnresolved);
}

TEST(Thesis, RebasedSequenceStopsIncreasing) {
  const Sequence g3 = generate(SeqSpec::goodstein(3), Budget{});
  const std::vector<Base> five = {Base(5)};
  const auto t = check_thesis(g3, five);
  EXPECT_EQ(t.verdict.kind, Kind::kHolds);
  EXPECT_EQ(t.u_trajectory, std::vector<std::uint64_t>(6, 2));
  EXPECT_EQ(t.limit_behaviour, "stabilized at 2");
  EXPECT_EQ(check_thesis(g3, {}).verdict.kind, Kind::kNotApplicable);
}

TEST(Thesis, GrowingTrajectoryOnG4) {
  Budget b;
  b.max_steps = 20;
  const auto t = check_thesis(generate(SeqSpec::goodstein(4), b), std::vector<Base>{});
  EXPECT_EQ(t.verdict.kind, Kind::kNotApplicable);
  EXPECT_EQ(t.limit_behaviour, "growing");
  EXPECT_EQ(t.u_trajectory.back(), 21u);
}

TEST(Sec9, ConstantTermDropsByOne) {
  // m_1(5) = 6 and m_2(5) = 5.
  const Sequence g3 = generate(SeqSpec::goodstein(3), Budget{});
  Sequence head = g3;
  head.terms.erase(head.terms.begin() + 2, head.terms.end());
  EXPECT_EQ(check_sec9(head, Base(5)).kind, Kind::kHolds);
}

TEST(Sec9, LowerBoundFailsOnLinearTerm) {
  // Term 2 is 1*3^1: m_2(x) = x but m_3(x) = 3, short of x - 2.
  const Sequence g3 = generate(SeqSpec::goodstein(3), Budget{});
  const Verdict v = check_sec9(g3, Base(5));
  ASSERT_EQ(v.kind, Kind::kFails);
  EXPECT_EQ(v.witness->index, 2u);
  EXPECT_EQ(v.witness->base, 5u);
  EXPECT_EQ(v.witness->values, naturals({5, 3, 3}));
  EXPECT_TRUE(replay_failure(ClaimId::kSec9, g3, check_claim(ClaimId::kSec9, g3)));
}

TEST(Sec9, EdgeCases) {
  const Sequence g0 = generate(SeqSpec::goodstein(0), Budget{});
  EXPECT_EQ(check_sec9(g0, Base(3)).kind, Kind::kNotApplicable);
  EXPECT_THROW(check_sec9(g0, Base(2)), Error);
}

TEST(Replay, EveryFailureReplays) {
  std::vector<SeqSpec> specs;
  for (int m = 1; m <= 8; ++m) specs.push_back(SeqSpec::goodstein(m));
  Budget b;
  b.max_steps = 300;
  std::vector<Sequence> seqs;
  for (const auto& s : specs) seqs.push_back(generate(s, b));
  int failures = 0;
  for (const auto& r : run_suite(seqs, all_claims())) {
    if (r.verdict.kind != Kind::kFails) continue;
    ++failures;
    const auto& seq = seqs.at(r.spec.seed.get_ui() - 1);
    EXPECT_TRUE(replay_failure(r.claim, seq, r.verdict)) << to_string(r.claim);
  }
  EXPECT_GT(failures, 0);
}

TEST(Replay, RejectsTamperedWitness) {
  const Sequence g1 = generate(SeqSpec::goodstein(1), Budget{});
  Verdict v = check_lemma7(g1);
  ASSERT_EQ(v.kind, Kind::kFails);
  EXPECT_TRUE(replay_failure(ClaimId::kLemma7, g1, v));
  v.witness->values = naturals({1});
  EXPECT_FALSE(replay_failure(ClaimId::kLemma7, g1, v));
  EXPECT_FALSE(replay_failure(ClaimId::kLemma7, g1, Verdict::holds(1)));
}

}  // namespace
}  // namespace goodstein
