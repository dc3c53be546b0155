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

#include "affect_audit/prediction_io.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "affect_audit/str_util.h"
#include "oracles.h"

namespace affect_audit {
namespace {

using testing_support::FixturePath;

std::string Record(std::string_view id, double a, double f, double j, double s,
                   std::string_view extra = "") {
  return StrCat("{\"sentence_id\":\"", id, "\",\"model_tag\":\"m\",\"probs\":{\"anger\":", a,
                ",\"fear\":", f, ",\"joy\":", j, ",\"sadness\":", s, "}", extra, "}\n");
}

TEST(PredictionTest, ArgmaxAndScore) {
  auto preds = ParsePredictions(Record("s1", 0.1, 0.2, 0.6, 0.1), "t");
  ASSERT_TRUE(preds.ok()) << preds.status();
  EXPECT_EQ((*preds)[0].predicted_class, Emotion::kJoy);
  EXPECT_DOUBLE_EQ((*preds)[0].predicted_score, 0.6);
}

TEST(PredictionTest, TieBreaksTowardEarlierEmotion) {
  auto preds = ParsePredictions(Record("s1", 0.25, 0.25, 0.25, 0.25), "t");
  ASSERT_TRUE(preds.ok());
  EXPECT_EQ((*preds)[0].predicted_class, Emotion::kAnger);
  auto p2 = MakePrediction("x", "m", {0.1, 0.4, 0.1, 0.4});
  ASSERT_TRUE(p2.ok());
  EXPECT_EQ(p2->predicted_class, Emotion::kFear);
}

TEST(PredictionTest, Errors) {
  auto err = [](std::string text) { return ParsePredictions(text, "preds.jsonl").status(); };
  absl::Status s = err(Record("bad-sum", 0.2, 0.2, 0.2, 0.2));
  EXPECT_FALSE(s.ok());
  EXPECT_THAT(std::string(ToStd(s.message())), ::testing::HasSubstr("bad-sum"));
  EXPECT_THAT(std::string(ToStd(s.message())), ::testing::HasSubstr("preds.jsonl:1"));
  EXPECT_FALSE(err(Record("neg", -0.1, 0.5, 0.5, 0.1)).ok());
  EXPECT_FALSE(err("{\"sentence_id\":\"x\",\"model_tag\":\"m\",\"probs\":{\"anger\":0.5,"
                   "\"fear\":0.5,\"joy\":0,\"sadness\":0,\"surprise\":0}}\n")
                   .ok());
  EXPECT_FALSE(err("{\"sentence_id\":\"x\",\"model_tag\":\"m\",\"probs\":{\"anger\":0.5,"
                   "\"fear\":0.5,\"joy\":0}}\n")
                   .ok());
  EXPECT_FALSE(err(Record("d", 0.1, 0.2, 0.6, 0.1) + Record("d", 0.1, 0.2, 0.6, 0.1)).ok());
  EXPECT_FALSE(err(Record("c", 0.1, 0.2, 0.6, 0.1, ",\"predicted_class\":\"fear\"")).ok());
  EXPECT_FALSE(err(Record("c", 0.1, 0.2, 0.6, 0.1, ",\"predicted_score\":0.2")).ok());
  EXPECT_TRUE(err(Record("c", 0.1, 0.2, 0.6, 0.1, ",\"predicted_class\":\"joy\"")).ok());
  EXPECT_FALSE(err("not json\n").ok());
}

TEST(PredictionTest, FixtureRoundTripsBitIdentically) {
  auto preds = ReadPredictions(FixturePath("predictions.jsonl"));
  ASSERT_TRUE(preds.ok()) << preds.status();
  EXPECT_EQ(preds->size(), 389u);
  const std::string written = WritePredictions(*preds);
  auto again = ParsePredictions(written, "rewritten");
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again, *preds);
  EXPECT_EQ(WritePredictions(*again), written);
}

TEST(PredictionPropertyTest, DerivedFieldsSatisfyInvariants) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5000; ++i) {
    auto probs = testing_support::RandomProbs(rng);
    if (i % 7 == 0) probs[rng() % 4] = probs[rng() % 4];  // provoke ties
    double sum = 0;
    for (double p : probs) sum += p;
    for (double& p : probs) p /= sum;
    auto pred = MakePrediction("x", "m", probs);
    ASSERT_TRUE(pred.ok());
    const double max = *std::max_element(probs.begin(), probs.end());
    EXPECT_EQ(pred->predicted_score, max);
    for (Emotion e : kAllEmotions) {
      if (e < pred->predicted_class) EXPECT_LT(pred->Prob(e), max);
    }
    EXPECT_EQ(pred->Prob(pred->predicted_class), max);
  }
}

class JoinTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto r = IngestCorpus(FixturePath("pairs_gender.csv"), "", ColumnMapping::Normalized());
    ASSERT_TRUE(r.ok());
    auto p = BuildPairing(r->records, Domain::kGender, Group::kMale, Group::kFemale);
    ASSERT_TRUE(p.ok());
    pairing_ = *p;
    auto preds = ReadPredictions(FixturePath("predictions.jsonl"));
    ASSERT_TRUE(preds.ok());
    preds_ = *preds;
  }
  GroupPairing pairing_;
  std::vector<Prediction> preds_;
};

TEST_F(JoinTest, IgnoresUnrelatedPredictions) {
  auto scored = JoinPredictions(pairing_, preds_);
  ASSERT_TRUE(scored.ok()) << scored.status();
  EXPECT_EQ(scored->size(), 100u);
  EXPECT_EQ(scored->ignored_predictions, preds_.size() - 200);
  EXPECT_EQ(scored->model_tag, "fixture-model");
  for (size_t i = 0; i < scored->size(); ++i) {
    EXPECT_EQ(scored->predictions[i].first.sentence_id, pairing_.pairs[i].first.sentence_id);
    EXPECT_EQ(scored->predictions[i].second.sentence_id, pairing_.pairs[i].second.sentence_id);
  }
}

TEST_F(JoinTest, MissingPredictionListsTheId) {
  std::vector<Prediction> partial;
  for (const Prediction& p : preds_) {
    if (p.sentence_id != "fixture:g042:F") partial.push_back(p);
  }
  auto scored = JoinPredictions(pairing_, partial);
  ASSERT_FALSE(scored.ok());
  EXPECT_THAT(std::string(ToStd(scored.status().message())),
              ::testing::HasSubstr("fixture:g042:F"));
}

TEST_F(JoinTest, MixedModelTagsAreAnError) {
  preds_[4].model_tag = "other";  // fixture:g001:F
  EXPECT_FALSE(JoinPredictions(pairing_, preds_).ok());
}

}  // namespace
}  // namespace affect_audit
