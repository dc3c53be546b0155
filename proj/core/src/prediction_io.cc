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
#include "affect_audit/str_util.h"

#include <cmath>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "affect_audit/checksum.h"
#include "affect_audit/logging.h"
#include "json.hpp"

namespace affect_audit {

using ordered_json = nlohmann::ordered_json;

Emotion ArgmaxEmotion(const std::array<double, kNumEmotions>& probs) {
  size_t best = 0;
  for (size_t i = 1; i < kNumEmotions; ++i) {
    if (probs[i] > probs[best]) best = i;
  }
  return kAllEmotions[best];
}

absl::StatusOr<Prediction> MakePrediction(std::string sentence_id,
                                          std::string model_tag,
                                          const std::array<double, kNumEmotions>& probs) {
  double sum = 0.0;
  for (Emotion e : kAllEmotions) {
    const double p = probs[Index(e)];
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      return absl::InvalidArgumentError(StrCat(
          "sentence ", sentence_id, ": probability for ", EmotionName(e),
          " is outside [0, 1]: ", p));
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > kProbabilitySumTolerance) {
    return absl::InvalidArgumentError(StrCat(
        "sentence ", sentence_id, ": probabilities sum to ", sum, ", not 1"));
  }
  Prediction pred;
  pred.sentence_id = std::move(sentence_id);
  pred.model_tag = std::move(model_tag);
  pred.probs = probs;
  pred.predicted_class = ArgmaxEmotion(probs);
  pred.predicted_score = probs[Index(pred.predicted_class)];
  return pred;
}

absl::StatusOr<std::vector<Prediction>> ParsePredictions(std::string_view jsonl,
                                                         std::string_view source_name) {
  std::vector<Prediction> preds;
  StringMap<size_t> seen;
  size_t line_no = 0;
  for (std::string_view line : StrSplit(jsonl, '\n')) {
    ++line_no;
    line = StripTrailingAsciiWhitespace(line);
    if (StripLeadingAsciiWhitespace(line).empty()) continue;
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(
          StrCat(source_name, ":", line_no, ": ", what));
    };
    try {
      const ordered_json j = ordered_json::parse(line);
      if (!j.is_object()) return error("record is not a JSON object");
      const std::string sentence_id = j.at("sentence_id").get<std::string>();
      const std::string model_tag = j.at("model_tag").get<std::string>();
      const ordered_json& probs_json = j.at("probs");
      if (!probs_json.is_object()) return error("probs is not an object");
      std::array<double, kNumEmotions> probs{};
      std::array<bool, kNumEmotions> present{};
      for (const auto& [key, value] : probs_json.items()) {
        std::optional<Emotion> e = ParseEmotion(key);
        if (!e || key != EmotionName(*e)) {
          return error(StrCat("record ", sentence_id, ": unknown emotion key '",
                                    key, "'"));
        }
        if (!value.is_number()) {
          return error(StrCat("record ", sentence_id, ": probs.", key,
                                    " is not a number"));
        }
        probs[Index(*e)] = value.get<double>();
        present[Index(*e)] = true;
      }
      for (Emotion e : kAllEmotions) {
        if (!present[Index(e)]) {
          return error(StrCat("record ", sentence_id, ": missing probs.",
                                    EmotionName(e)));
        }
      }
      absl::StatusOr<Prediction> pred = MakePrediction(sentence_id, model_tag, probs);
      if (!pred.ok()) return error(StatusMessage(pred.status()));

      if (j.contains("predicted_class")) {
        const std::string cls = j.at("predicted_class").get<std::string>();
        if (cls != EmotionName(pred->predicted_class)) {
          return error(StrCat("record ", sentence_id, ": predicted_class '", cls,
                                    "' disagrees with argmax '",
                                    EmotionName(pred->predicted_class), "'"));
        }
      }
      if (j.contains("predicted_score")) {
        const double score = j.at("predicted_score").get<double>();
        if (std::fabs(score - pred->predicted_score) > 1e-9) {
          return error(StrCat("record ", sentence_id, ": predicted_score ", score,
                                    " disagrees with max probability ",
                                    pred->predicted_score));
        }
      }
      if (auto [it, inserted] = seen.emplace(sentence_id, line_no); !inserted) {
        return error(StrCat("duplicate sentence_id '", sentence_id,
                                  "' (first on line ", it->second, ")"));
      }
      preds.push_back(*std::move(pred));
    } catch (const nlohmann::json::exception& e) {
      return error(e.what());
    }
  }
  return preds;
}

absl::StatusOr<std::vector<Prediction>> ReadPredictions(
    const std::filesystem::path& path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  return ParsePredictions(*text, path.string());
}

std::string WritePredictions(const std::vector<Prediction>& predictions) {
  std::string out;
  for (const Prediction& p : predictions) {
    ordered_json j;
    j["sentence_id"] = p.sentence_id;
    j["model_tag"] = p.model_tag;
    ordered_json probs = ordered_json::object();
    for (Emotion e : kAllEmotions) probs[std::string(EmotionName(e))] = p.Prob(e);
    j["probs"] = std::move(probs);
    j["predicted_class"] = std::string(EmotionName(p.predicted_class));
    j["predicted_score"] = p.predicted_score;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

absl::StatusOr<ScoredPairing> JoinPredictions(const GroupPairing& pairing,
                                              const std::vector<Prediction>& preds) {
  StringMap<const Prediction*> by_id;
  by_id.reserve(preds.size());
  for (const Prediction& p : preds) by_id.emplace(p.sentence_id, &p);

  ScoredPairing scored;
  scored.pairing = pairing;
  scored.predictions.reserve(pairing.size());
  std::vector<std::string> missing;
  size_t used = 0;
  auto lookup = [&](const PairRecord& r) -> const Prediction* {
    auto it = by_id.find(r.sentence_id);
    if (it == by_id.end()) {
      missing.push_back(r.sentence_id);
      return nullptr;
    }
    ++used;
    return it->second;
  };
  for (const auto& [a, b] : pairing.pairs) {
    const Prediction* pa = lookup(a);
    const Prediction* pb = lookup(b);
    if (pa != nullptr && pb != nullptr) scored.predictions.emplace_back(*pa, *pb);
  }
  if (!missing.empty()) {
    constexpr size_t kShown = 20;
    std::vector<std::string> shown(missing.begin(),
                                   missing.begin() + std::min(missing.size(), kShown));
    return absl::NotFoundError(StrCat(
        "missing predictions for ", missing.size(), " sentence(s): ",
        StrJoin(shown, ", "), missing.size() > kShown ? ", ..." : ""));
  }
  for (const auto& [pa, pb] : scored.predictions) {
    for (const Prediction* p : {&pa, &pb}) {
      if (scored.model_tag.empty()) scored.model_tag = p->model_tag;
      if (p->model_tag != scored.model_tag) {
        return absl::InvalidArgumentError(StrCat(
            "mixed model tags in one pairing: '", scored.model_tag, "' and '",
            p->model_tag, "' (sentence ", p->sentence_id, ")"));
      }
    }
  }
  scored.ignored_predictions = preds.size() - used;
  if (scored.ignored_predictions > 0) {
    LogInfo(StrCat("join ignored ", scored.ignored_predictions,
                         " predictions for sentences outside the pairing"));
  }
  return scored;
}

}  // namespace affect_audit
