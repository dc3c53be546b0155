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

#ifndef AFFECT_AUDIT_PREDICTION_IO_H_
#define AFFECT_AUDIT_PREDICTION_IO_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "affect_audit/labels.h"
#include "affect_audit/pair_corpus.h"

namespace affect_audit {

// Tolerance on the probability vector's sum.
inline constexpr double kProbabilitySumTolerance = 1e-4;

// One classifier output. predicted_class and predicted_score are always
// derived from probs: argmax under the fixed emotion order, and the max.
struct Prediction {
  std::string sentence_id;
  std::string model_tag;
  std::array<double, kNumEmotions> probs{};
  Emotion predicted_class = Emotion::kAnger;
  double predicted_score = 0.0;

  double Prob(Emotion e) const { return probs[Index(e)]; }

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Validates `probs` (each in [0, 1], sum within tolerance) and fills the
// derived fields.
absl::StatusOr<Prediction> MakePrediction(std::string sentence_id,
                                          std::string model_tag,
                                          const std::array<double, kNumEmotions>& probs);

// Argmax with ties resolved toward the earlier emotion.
Emotion ArgmaxEmotion(const std::array<double, kNumEmotions>& probs);

// Newline-delimited JSON, one object per sentence:
//   {"sentence_id": "...", "model_tag": "...",
//    "probs": {"anger": p, "fear": p, "joy": p, "sadness": p},
//    "predicted_class": "joy", "predicted_score": p}
// predicted_class / predicted_score are optional on input and are checked
// against the recomputed values when present.
absl::StatusOr<std::vector<Prediction>> ParsePredictions(std::string_view jsonl,
                                                         std::string_view source_name);
absl::StatusOr<std::vector<Prediction>> ReadPredictions(
    const std::filesystem::path& path);
std::string WritePredictions(const std::vector<Prediction>& predictions);

// A pairing with the prediction for both sentences of every pair.
struct ScoredPairing {
  GroupPairing pairing;
  std::vector<std::pair<Prediction, Prediction>> predictions;  // aligned with pairs
  std::string model_tag;
  size_t ignored_predictions = 0;

  size_t size() const { return predictions.size(); }
};

// Total join: every sentence of the pairing must have a prediction, and all
// of them must share one model_tag. Predictions for other sentences are
// ignored and counted.
absl::StatusOr<ScoredPairing> JoinPredictions(const GroupPairing& pairing,
                                              const std::vector<Prediction>& preds);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_PREDICTION_IO_H_
