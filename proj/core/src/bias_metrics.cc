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
#include "affect_audit/str_util.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "affect_audit/stat_tests.h"

namespace affect_audit {

std::string_view ScoreModeName(ScoreMode mode) {
  return mode == ScoreMode::kEmotionProbability ? "emotion-probability"
                                                : "max-probability";
}

std::string_view BucketModeName(BucketMode mode) {
  return mode == BucketMode::kGold ? "gold" : "predicted-union";
}

std::optional<ScoreMode> ParseScoreMode(std::string_view s) {
  const std::string lower = AsciiStrToLower(s);
  if (lower == "emotion-probability" || lower == "emotion") {
    return ScoreMode::kEmotionProbability;
  }
  if (lower == "max-probability" || lower == "max") return ScoreMode::kMaxProbability;
  return std::nullopt;
}

std::optional<BucketMode> ParseBucketMode(std::string_view s) {
  const std::string lower = AsciiStrToLower(s);
  if (lower == "gold") return BucketMode::kGold;
  if (lower == "predicted-union" || lower == "union") return BucketMode::kPredictedUnion;
  return std::nullopt;
}

BucketMode ResolveBucketMode(const GroupPairing& pairing) {
  for (const auto& [a, b] : pairing.pairs) {
    if (!a.gold_emotion && !b.gold_emotion) return BucketMode::kPredictedUnion;
  }
  return BucketMode::kGold;
}

absl::StatusOr<EmotionBucket> MakeBucket(const ScoredPairing& scored, Emotion emotion,
                                         ScoreMode score_mode, BucketMode bucket_mode) {
  EmotionBucket bucket;
  bucket.emotion = emotion;
  bucket.score_mode = score_mode;
  bucket.bucket_mode = bucket_mode;
  auto score = [&](const Prediction& p) {
    return score_mode == ScoreMode::kEmotionProbability ? p.Prob(emotion)
                                                        : p.predicted_score;
  };
  for (size_t i = 0; i < scored.predictions.size(); ++i) {
    const auto& [pa, pb] = scored.predictions[i];
    bool member = false;
    if (bucket_mode == BucketMode::kGold) {
      const auto& [ra, rb] = scored.pairing.pairs[i];
      const std::optional<Emotion> gold = ra.gold_emotion ? ra.gold_emotion : rb.gold_emotion;
      if (!gold) {
        return absl::FailedPreconditionError(StrCat(
            "gold bucketing needs a gold emotion; pair ", ra.pair_id, " has none"));
      }
      member = *gold == emotion;
    } else {
      member = pa.predicted_class == emotion || pb.predicted_class == emotion;
    }
    if (!member) continue;
    bucket.pair_indices.push_back(i);
    bucket.score_a.push_back(score(pa));
    bucket.score_b.push_back(score(pb));
  }
  return bucket;
}

EmotionBucket BucketFromScores(Emotion emotion, std::vector<double> score_a,
                               std::vector<double> score_b) {
  EmotionBucket bucket;
  bucket.emotion = emotion;
  bucket.score_a = std::move(score_a);
  bucket.score_b = std::move(score_b);
  bucket.score_b.resize(bucket.score_a.size());
  for (size_t i = 0; i < bucket.score_a.size(); ++i) bucket.pair_indices.push_back(i);
  return bucket;
}

double ParityRatio(double p_a, double p_b) {
  const double hi = std::max(p_a, p_b);
  if (hi == 0.0) return 1.0;
  return std::min(p_a, p_b) / hi;
}

absl::StatusOr<DemographicParity> DemographicParityFromCounts(size_t hits_a, size_t n_a,
                                                              size_t hits_b, size_t n_b) {
  if (n_a == 0 || n_b == 0) {
    return absl::InvalidArgumentError("demographic parity needs both groups non-empty");
  }
  if (hits_a > n_a || hits_b > n_b) {
    return absl::InvalidArgumentError("class count exceeds group size");
  }
  DemographicParity dp;
  dp.hits_a = hits_a;
  dp.hits_b = hits_b;
  dp.n_a = n_a;
  dp.n_b = n_b;
  dp.p_a = static_cast<double>(hits_a) / static_cast<double>(n_a);
  dp.p_b = static_cast<double>(hits_b) / static_cast<double>(n_b);
  // Cross-multiplied so that scaled counts give bit-identical ratios.
  const double ca = static_cast<double>(hits_a) * static_cast<double>(n_b);
  const double cb = static_cast<double>(hits_b) * static_cast<double>(n_a);
  dp.dp = ParityRatio(ca, cb);
  return dp;
}

absl::StatusOr<DemographicParity> ComputeDemographicParity(const ScoredPairing& scored,
                                                           Emotion emotion) {
  size_t hits_a = 0;
  size_t hits_b = 0;
  for (const auto& [pa, pb] : scored.predictions) {
    hits_a += pa.predicted_class == emotion;
    hits_b += pb.predicted_class == emotion;
  }
  const size_t n = scored.predictions.size();
  return DemographicParityFromCounts(hits_a, n, hits_b, n);
}

absl::StatusOr<double> AverageDelta(const EmotionBucket& bucket) {
  if (bucket.empty()) return absl::InvalidArgumentError("avg.delta of an empty bucket");
  std::vector<double> diffs(bucket.size());
  for (size_t i = 0; i < bucket.size(); ++i) {
    diffs[i] = std::fabs(bucket.score_a[i] - bucket.score_b[i]);
  }
  return CompensatedSum(diffs) / static_cast<double>(diffs.size());
}

absl::StatusOr<double> PairedPValue(const EmotionBucket& bucket) {
  if (bucket.size() < 2) {
    return absl::InvalidArgumentError(
        StrCat("paired t-test needs at least 2 pairs, got ", bucket.size()));
  }
  std::vector<double> d(bucket.size());
  for (size_t i = 0; i < bucket.size(); ++i) d[i] = bucket.score_a[i] - bucket.score_b[i];
  absl::StatusOr<SampleStats> stats = ComputeSampleStats(d);
  if (!stats.ok()) return stats.status();
  if (stats->stddev == 0.0) return stats->mean == 0.0 ? 1.0 : 0.0;
  const double n = static_cast<double>(d.size());
  const double t = stats->mean / (stats->stddev / std::sqrt(n));
  return StudentTTwoSidedSf(t, n - 1.0);
}

absl::StatusOr<AcsResult> AverageConfidenceScore(const EmotionBucket& bucket) {
  std::vector<double> terms;
  terms.reserve(bucket.size());
  AcsResult result;
  for (size_t i = 0; i < bucket.size(); ++i) {
    if (bucket.score_b[i] < kAcsMinDivisor) {
      ++result.skipped;
      continue;
    }
    terms.push_back(1.0 - bucket.score_a[i] / bucket.score_b[i]);
  }
  if (terms.empty()) {
    return absl::InvalidArgumentError(StrCat(
        "ACS has no usable pairs (", result.skipped, " skipped for a zero divisor)"));
  }
  result.used = terms.size();
  result.acs = CompensatedSum(terms) / static_cast<double>(terms.size());
  return result;
}

void ApplyThresholds(const Thresholds& thresholds, MetricCell& cell) {
  cell.dp_below_threshold = cell.dp < thresholds.tau;
  cell.p_significant = cell.p_value.has_value() && *cell.p_value < thresholds.alpha;
}

absl::StatusOr<MetricCell> EvaluateCell(const ScoredPairing& scored, Emotion emotion,
                                        ScoreMode score_mode, BucketMode bucket_mode,
                                        const Thresholds& thresholds) {
  absl::StatusOr<DemographicParity> dp = ComputeDemographicParity(scored, emotion);
  if (!dp.ok()) return dp.status();
  absl::StatusOr<EmotionBucket> bucket = MakeBucket(scored, emotion, score_mode, bucket_mode);
  if (!bucket.ok()) return bucket.status();

  MetricCell cell;
  cell.emotion = emotion;
  cell.dp = dp->dp;
  cell.n_a = dp->n_a;
  cell.n_b = dp->n_b;
  cell.n_pairs = bucket->size();
  if (!bucket->empty()) {
    cell.avg_delta = *AverageDelta(*bucket);
    if (bucket->size() >= 2) {
      absl::StatusOr<double> p = PairedPValue(*bucket);
      if (!p.ok()) return p.status();
      cell.p_value = *p;
    }
    absl::StatusOr<AcsResult> acs = AverageConfidenceScore(*bucket);
    if (acs.ok()) {
      cell.acs = acs->acs;
      cell.acs_skipped = acs->skipped;
    } else {
      cell.acs_skipped = bucket->size();
    }
  }
  ApplyThresholds(thresholds, cell);
  return cell;
}

}  // namespace affect_audit
