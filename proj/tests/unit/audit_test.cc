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

#include "affect_audit/audit.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace affect_audit {
namespace {

using testing_support::CompareReports;
using testing_support::FixturePath;

class AuditFixtureTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto records = testing_support::LoadFixturePairs();
    ASSERT_TRUE(records.ok()) << records.status();
    records_ = *records;
    auto preds = ReadPredictions(FixturePath("predictions.jsonl"));
    ASSERT_TRUE(preds.ok()) << preds.status();
    preds_ = *preds;
  }

  std::vector<PairRecord> records_;
  std::vector<Prediction> preds_;
};

TEST_F(AuditFixtureTest, MatchesGoldenReport) {
  auto golden = testing_support::LoadGoldenReport();
  ASSERT_TRUE(golden.ok()) << golden.status();
  auto report = RunAudit(records_, preds_, {});
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(CompareReports(*report, *golden), "");
}

TEST_F(AuditFixtureTest, ColumnOrderAndBucketModes) {
  auto report = RunAudit(records_, preds_, {});
  ASSERT_TRUE(report.ok());
  std::vector<std::string> ids;
  for (const ReportColumn& c : report->columns) {
    ids.push_back(c.corpus + ":" + c.PairingId() + ":" +
                  std::string(BucketModeName(c.bucket_mode)));
  }
  EXPECT_THAT(ids, ::testing::ElementsAre("fixture:MxF:gold", "fixture:MxNb:gold",
                                          "fixture:FxNb:gold", "csp:ChxMu:predicted-union",
                                          "csp:ChxJw:predicted-union",
                                          "csp:MuxJw:predicted-union"));
  // Jw lacks r029.
  EXPECT_EQ(report->columns[3].cells[0].n_a, 30u);
  EXPECT_EQ(report->columns[4].cells[0].n_a, 29u);
}

TEST_F(AuditFixtureTest, FixtureParityAnchors) {
  auto report = RunAudit(records_, preds_, {});
  ASSERT_TRUE(report.ok());
  const ReportColumn& mf = report->columns[0];
  EXPECT_DOUBLE_EQ(mf.cells[Index(Emotion::kFear)].dp, 0.8);
  EXPECT_FALSE(mf.cells[Index(Emotion::kFear)].dp_below_threshold);
  EXPECT_NEAR(mf.cells[Index(Emotion::kJoy)].dp, 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(mf.cells[Index(Emotion::kJoy)].dp_below_threshold);
}

TEST_F(AuditFixtureTest, TighterTauFlagsSuperset) {
  auto base = RunAudit(records_, preds_, {});
  AuditOptions strict;
  strict.thresholds.tau = 0.9;
  auto tight = RunAudit(records_, preds_, strict);
  ASSERT_TRUE(base.ok() && tight.ok());
  for (size_t c = 0; c < base->columns.size(); ++c) {
    for (size_t e = 0; e < kNumEmotions; ++e) {
      if (base->columns[c].cells[e].dp_below_threshold) {
        EXPECT_TRUE(tight->columns[c].cells[e].dp_below_threshold);
      }
    }
  }
}

TEST_F(AuditFixtureTest, MissingPredictionIsAnError) {
  preds_.erase(preds_.begin() + 7);
  auto report = RunAudit(records_, preds_, {});
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.status().code(), absl::StatusCode::kNotFound);
}

TEST_F(AuditFixtureTest, ForcedGoldOnUnlabelledCorpusFails) {
  AuditOptions opts;
  opts.bucket_mode = BucketMode::kGold;
  EXPECT_FALSE(RunAudit(records_, preds_, opts).ok());
}

TEST_F(AuditFixtureTest, ExplicitPairings) {
  AuditOptions opts;
  opts.pairings = {{Group::kFemale, Group::kMale}};
  auto report = RunAudit(records_, preds_, opts);
  ASSERT_TRUE(report.ok());
  ASSERT_EQ(report->columns.size(), 1u);
  EXPECT_EQ(report->columns[0].PairingId(), "FxM");
  opts.pairings = {{Group::kMale, Group::kMuslim}};
  EXPECT_FALSE(RunAudit(records_, preds_, opts).ok());
}

}  // namespace
}  // namespace affect_audit
