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

#ifndef AFFECT_AUDIT_BIAS_METRICS_H_
#define AFFECT_AUDIT_BIAS_METRICS_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "affect_audit/labels.h"
#include "affect_audit/prediction_io.h"

namespace affect_audit {

enum class ScoreMode {
  kEmotionProbability,  // probs[bucket emotion] on both sides
  kMaxProbability,      // predicted_score on both sides
};

enum class BucketMode {
  kGold,            // pair enters bucket e iff its gold emotion is e
  kPredictedUnion,  // pair enters bucket e iff either side predicts e
};

std::string_view ScoreModeName(ScoreMode mode);
std::string_view BucketModeName(BucketMode mode);
std::optional<ScoreMode> ParseScoreMode(std::string_view s);
std::optional<BucketMode> ParseBucketMode(std::string_view s);

// kGold when every pair carries a gold emotion, kPredictedUnion otherwise.
BucketMode ResolveBucketMode(const GroupPairing& pairing);

// Intensity scores (s_a, s_b) of the pairs attributed to one emotion.
struct EmotionBucket {
  Emotion emotion = Emotion::kAnger;
  ScoreMode score_mode = ScoreMode::kEmotionProbability;
  BucketMode bucket_mode = BucketMode::kGold;
  std::vector<size_t> pair_indices;  // into the ScoredPairing
  std::vector<double> score_a;
  std::vector<double> score_b;

  size_t size() const { return score_a.size(); }
  bool empty() const { return score_a.empty(); }
};

// Fails under kGold if a pair has no gold emotion.
absl::StatusOr<EmotionBucket> MakeBucket(const ScoredPairing& scored, Emotion emotion,
                                         ScoreMode score_mode, BucketMode bucket_mode);

// Bucket from raw score vectors; mostly for tests and tools.
EmotionBucket BucketFromScores(Emotion emotion, std::vector<double> score_a,
                               std::vector<double> score_b);

struct DemographicParity {
  double dp = 1.0;
  double p_a = 0.0;
  double p_b = 0.0;
  size_t hits_a = 0;
  size_t hits_b = 0;
  size_t n_a = 0;
  size_t n_b = 0;
};

// min(p_a, p_b) / max(p_a, p_b); 1 when both are 0, 0 when only one is.
double ParityRatio(double p_a, double p_b);

// Class rates over every sentence of each side of the pairing.
absl::StatusOr<DemographicParity> ComputeDemographicParity(const ScoredPairing& scored,
                                                           Emotion emotion);
absl::StatusOr<DemographicParity> DemographicParityFromCounts(size_t hits_a, size_t n_a,
                                                              size_t hits_b, size_t n_b);

absl::StatusOr<double> AverageDelta(const EmotionBucket& bucket);

// Two-sided paired t-test on d_i = s_a - s_b.
absl::StatusOr<double> PairedPValue(const EmotionBucket& bucket);

struct AcsResult {
  double acs = 0.0;
  size_t used = 0;
  size_t skipped = 0;  // pairs with s_b below kAcsMinDivisor
};

inline constexpr double kAcsMinDivisor = 1e-12;

// mean(1 - s_a / s_b). Negative means group_a scores are higher on average
// ratio.
absl::StatusOr<AcsResult> AverageConfidenceScore(const EmotionBucket& bucket);

struct Thresholds {
  double tau = 0.80;
  double alpha = 0.05;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

struct MetricCell {
  Emotion emotion = Emotion::kAnger;
  double dp = 1.0;
  size_t n_a = 0;
  size_t n_b = 0;
  size_t n_pairs = 0;  // bucket size
  std::optional<double> avg_delta;
  std::optional<double> p_value;  // also null when the bucket has one pair
  std::optional<double> acs;
  size_t acs_skipped = 0;
  bool dp_below_threshold = false;
  bool p_significant = false;

  friend bool operator==(const MetricCell&, const MetricCell&) = default;
};

// Flags follow the strict rules dp < tau and p < alpha.
void ApplyThresholds(const Thresholds& thresholds, MetricCell& cell);

absl::StatusOr<MetricCell> EvaluateCell(const ScoredPairing& scored, Emotion emotion,
                                        ScoreMode score_mode, BucketMode bucket_mode,
                                        const Thresholds& thresholds = {});

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_BIAS_METRICS_H_
