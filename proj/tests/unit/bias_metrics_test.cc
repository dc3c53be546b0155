// Copyright 2026 The Affect Audit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affect_audit/bias_metrics.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace affect_audit {
namespace {

using testing_support::FixturePath;

EmotionBucket Bucket(std::vector<double> a, std::vector<double> b) {
  return BucketFromScores(Emotion::kJoy, std::move(a), std::move(b));
}

TEST(DemographicParityTest, Examples) {
  EXPECT_DOUBLE_EQ(ParityRatio(0.25, 0.5), 0.5);
  EXPECT_EQ(ParityRatio(0.3, 0.3), 1.0);
  EXPECT_EQ(ParityRatio(0.0, 0.0), 1.0);
  EXPECT_EQ(ParityRatio(0.0, 0.4), 0.0);
  auto dp = DemographicParityFromCounts(20, 100, 25, 100);
  ASSERT_TRUE(dp.ok());
  EXPECT_EQ(dp->dp, 0.8);
  MetricCell cell;
  cell.dp = dp->dp;
  ApplyThresholds(Thresholds{}, cell);
  EXPECT_FALSE(cell.dp_below_threshold);
  EXPECT_FALSE(DemographicParityFromCounts(0, 0, 1, 2).ok());
}

TEST(DemographicParityTest, SymmetricAndScaleFree) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const size_t na = 1 + rng() % 200, nb = 1 + rng() % 200;
    const size_t ha = rng() % (na + 1), hb = rng() % (nb + 1);
    const double dp = DemographicParityFromCounts(ha, na, hb, nb)->dp;
    EXPECT_GE(dp, 0.0);
    EXPECT_LE(dp, 1.0);
    EXPECT_EQ(dp, DemographicParityFromCounts(hb, nb, ha, na)->dp);
    const size_t k = 1 + rng() % 50;
    EXPECT_EQ(dp, DemographicParityFromCounts(k * ha, k * na, k * hb, k * nb)->dp);
    EXPECT_EQ(dp == 1.0, ha * nb == hb * na);
  }
}

TEST(AverageDeltaTest, Examples) {
  EXPECT_NEAR(*AverageDelta(Bucket({0.7, 0.4}, {0.5, 0.6})), 0.2, 1e-15);
  EXPECT_EQ(*AverageDelta(Bucket({0.3, 0.9}, {0.3, 0.9})), 0.0);
  EXPECT_FALSE(AverageDelta(Bucket({}, {})).ok());
}

TEST(AverageDeltaTest, MatchesOneLineRecomputation) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> a(20), b(20);
  for (size_t i = 0; i < 20; ++i) a[i] = u(rng), b[i] = u(rng);
  double sum = 0;
  for (size_t i = 0; i < 20; ++i) sum += std::fabs(a[i] - b[i]);
  EXPECT_NEAR(*AverageDelta(Bucket(a, b)), sum / 20, 1e-12);
}

TEST(PairedPValueTest, Examples) {
  EXPECT_EQ(*PairedPValue(Bucket({0.5, 0.2, 0.9}, {0.5, 0.2, 0.9})), 1.0);
  EXPECT_EQ(*PairedPValue(Bucket({0.75, 0.5}, {0.5, 0.25})), 0.0);
  // d = [0.30, -0.10, 0.20, 0.05, -0.15], pinned from a reference routine.
  EXPECT_NEAR(*PairedPValue(Bucket({0.8, 0.4, 0.7, 0.55, 0.35}, {0.5, 0.5, 0.5, 0.5, 0.5})),
              0.522582076395205, 1e-6);
  // Two pairs give df = 1; d = [0, 1] has t = 1 exactly.
  EXPECT_NEAR(*PairedPValue(Bucket({0.5, 1.0}, {0.5, 0.0})), 0.5, 1e-12);
  EXPECT_FALSE(PairedPValue(Bucket({0.5}, {0.4})).ok());
}

TEST(PairedPValueTest, ShiftInvariantAndSymmetric) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.1, 0.6);
  for (int i = 0; i < 300; ++i) {
    const size_t n = 2 + rng() % 40;
    std::vector<double> a(n), b(n);
    for (size_t k = 0; k < n; ++k) a[k] = u(rng), b[k] = u(rng);
    const double p = *PairedPValue(Bucket(a, b));
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    EXPECT_NEAR(p, *PairedPValue(Bucket(b, a)), 1e-12);
    std::vector<double> a2 = a, b2 = b;
    const double c = 0.25;
    for (size_t k = 0; k < n; ++k) a2[k] += c, b2[k] += c;
    EXPECT_NEAR(p, *PairedPValue(Bucket(a2, b2)), 1e-9);
  }
}

TEST(AcsTest, Examples) {
  EXPECT_DOUBLE_EQ(AverageConfidenceScore(Bucket({0.5}, {1.0}))->acs, 0.5);
  EXPECT_DOUBLE_EQ(AverageConfidenceScore(Bucket({1.0}, {0.5}))->acs, -1.0);
  EXPECT_EQ(AverageConfidenceScore(Bucket({0.2, 0.7}, {0.2, 0.7}))->acs, 0.0);
}

TEST(AcsTest, OrientationAndSkips) {
  // Group a higher on average ratio gives a negative ACS.
  auto r = AverageConfidenceScore(Bucket({0.9, 0.8, 0.4}, {0.3, 0.4, 0.0}));
  ASSERT_TRUE(r.ok());
  EXPECT_LT(r->acs, 0.0);
  EXPECT_EQ(r->skipped, 1u);
  EXPECT_EQ(r->used, 2u);
  EXPECT_FALSE(AverageConfidenceScore(Bucket({0.5}, {0.0})).ok());
}

TEST(EvaluateCellTest, EmptyBucketKeepsDp) {
  std::mt19937_64 rng(1);
  ScoredPairing scored = testing_support::RandomScoredPairing(rng, 10, true);
  for (auto& [a, b] : scored.pairing.pairs) a.gold_emotion = b.gold_emotion = Emotion::kAnger;
  auto cell = EvaluateCell(scored, Emotion::kJoy, ScoreMode::kEmotionProbability,
                           BucketMode::kGold);
  ASSERT_TRUE(cell.ok());
  EXPECT_EQ(cell->n_pairs, 0u);
  EXPECT_FALSE(cell->avg_delta.has_value());
  EXPECT_FALSE(cell->p_value.has_value());
  EXPECT_FALSE(cell->acs.has_value());
  EXPECT_EQ(cell->n_a, 10u);
}

TEST(EvaluateCellTest, FlagsFollowThresholds) {
  MetricCell cell;
  cell.dp = 0.743;
  cell.p_value = 0.051;
  ApplyThresholds(Thresholds{}, cell);
  EXPECT_TRUE(cell.dp_below_threshold);
  EXPECT_FALSE(cell.p_significant);
  cell.p_value = 0.049;
  ApplyThresholds(Thresholds{}, cell);
  EXPECT_TRUE(cell.p_significant);
}

TEST(EvaluateCellTest, GoldModeNeedsGold) {
  std::mt19937_64 rng(1);
  ScoredPairing scored = testing_support::RandomScoredPairing(rng, 5, false);
  EXPECT_FALSE(
      EvaluateCell(scored, Emotion::kJoy, ScoreMode::kEmotionProbability, BucketMode::kGold)
          .ok());
  EXPECT_EQ(ResolveBucketMode(scored.pairing), BucketMode::kPredictedUnion);
}

TEST(EvaluateCellPropertyTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 300; ++iter) {
    const bool gold = rng() % 2 == 0;
    ScoredPairing scored = testing_support::RandomScoredPairing(rng, 1 + rng() % 50, gold);
    const ScoreMode sm = rng() % 2 ? ScoreMode::kEmotionProbability : ScoreMode::kMaxProbability;
    const BucketMode bm = gold && rng() % 2 ? BucketMode::kGold : BucketMode::kPredictedUnion;
    for (Emotion e : kAllEmotions) {
      auto cell = EvaluateCell(scored, e, sm, bm);
      ASSERT_TRUE(cell.ok()) << cell.status();
      auto want = testing_support::OracleEvaluate(scored, e, sm, bm);
      EXPECT_NEAR(cell->dp, want.dp, 1e-12);
      EXPECT_EQ(cell->n_pairs, want.n_pairs);
      ASSERT_EQ(cell->avg_delta.has_value(), want.has_intensity);
      if (want.has_intensity) EXPECT_NEAR(*cell->avg_delta, want.avg_delta, 1e-12);
      ASSERT_EQ(cell->p_value.has_value(), want.has_p);
      if (want.has_p) EXPECT_NEAR(*cell->p_value, want.p, 1e-9);
      ASSERT_EQ(cell->acs.has_value(), want.has_acs);
      if (want.has_acs) EXPECT_NEAR(*cell->acs, want.acs, 1e-12);
    }
  }
}

TEST(EvaluateCellPropertyTest, GroupOrderSymmetry) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    ScoredPairing scored = testing_support::RandomScoredPairing(rng, 2 + rng() % 30, true);
    ScoredPairing swapped = scored;
    std::swap(swapped.pairing.group_a, swapped.pairing.group_b);
    for (auto& [a, b] : swapped.pairing.pairs) std::swap(a, b);
    for (auto& [a, b] : swapped.predictions) std::swap(a, b);
    for (Emotion e : kAllEmotions) {
      auto x = EvaluateCell(scored, e, ScoreMode::kEmotionProbability, BucketMode::kGold);
      auto y = EvaluateCell(swapped, e, ScoreMode::kEmotionProbability, BucketMode::kGold);
      ASSERT_TRUE(x.ok() && y.ok());
      EXPECT_EQ(x->dp, y->dp);
      if (x->avg_delta) EXPECT_NEAR(*x->avg_delta, *y->avg_delta, 1e-15);
      if (x->p_value) EXPECT_NEAR(*x->p_value, *y->p_value, 1e-12);
    }
  }
}

TEST(EvaluateCellTest, FixtureClassCounts) {
  auto r = IngestCorpus(FixturePath("pairs_gender.csv"), "", ColumnMapping::Normalized());
  auto preds = ReadPredictions(FixturePath("predictions.jsonl"));
  ASSERT_TRUE(r.ok() && preds.ok());
  auto pairing = BuildPairing(r->records, Domain::kGender, Group::kMale, Group::kFemale);
  auto scored = JoinPredictions(*pairing, *preds);
  ASSERT_TRUE(scored.ok());
  // The fixture was built with fear predicted for 20 of 100 M and 25 of 100 F
  // sentences, and joy for 30 and 20.
  auto fear = ComputeDemographicParity(*scored, Emotion::kFear);
  EXPECT_EQ(fear->hits_a, 20u);
  EXPECT_EQ(fear->hits_b, 25u);
  EXPECT_EQ(fear->dp, 0.8);
  auto joy = EvaluateCell(*scored, Emotion::kJoy, ScoreMode::kEmotionProbability,
                          BucketMode::kGold);
  ASSERT_TRUE(joy.ok());
  EXPECT_NEAR(joy->dp, 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(joy->dp_below_threshold);
  EXPECT_EQ(joy->n_pairs, 25u);
}

}  // namespace
}  // namespace affect_audit
