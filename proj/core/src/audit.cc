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

#include <algorithm>
#include <string>

#include "absl/status/status.h"
#include "affect_audit/logging.h"
#include "affect_audit/str_util.h"

namespace affect_audit {

absl::StatusOr<BiasReport> RunAudit(const std::vector<PairRecord>& records,
                                    const std::vector<Prediction>& predictions,
                                    const AuditOptions& options) {
  std::vector<std::string> corpora;
  for (const PairRecord& r : records) {
    if (std::find(corpora.begin(), corpora.end(), r.corpus_tag) == corpora.end()) {
      corpora.push_back(r.corpus_tag);
    }
  }
  const std::vector<GroupPair> pairings =
      options.pairings.empty()
          ? std::vector<GroupPair>(kStandardPairings.begin(), kStandardPairings.end())
          : options.pairings;

  for (const GroupPair& gp : pairings) {
    if (DomainOf(gp.a) != DomainOf(gp.b) || gp.a == gp.b) {
      return absl::InvalidArgumentError(
          StrCat("pairing ", GroupName(gp.a), "x", GroupName(gp.b), " is not within one domain"));
    }
  }

  BiasReport report;
  report.thresholds = options.thresholds;
  for (const std::string& corpus : corpora) {
    std::vector<PairRecord> subset;
    std::array<bool, kNumGroups> present{};
    for (const PairRecord& r : records) {
      if (r.corpus_tag != corpus) continue;
      subset.push_back(r);
      present[Index(r.group)] = true;
    }
    for (const GroupPair& gp : pairings) {
      if (!present[Index(gp.a)] || !present[Index(gp.b)]) continue;
      absl::StatusOr<GroupPairing> pairing = BuildPairing(subset, DomainOf(gp.a), gp.a, gp.b);
      if (!pairing.ok()) return pairing.status();
      if (pairing->pairs.empty()) {
        LogWarning(StrCat(corpus, " ", GroupName(gp.a), "x", GroupName(gp.b),
                          ": no aligned pairs; column skipped"));
        continue;
      }
      absl::StatusOr<ScoredPairing> scored = JoinPredictions(*pairing, predictions);
      if (!scored.ok()) {
        return absl::Status(scored.status().code(),
                            StrCat(corpus, " ", GroupName(gp.a), "x", GroupName(gp.b),
                                   ": ", StatusMessage(scored.status())));
      }
      if (report.model_tag.empty()) {
        report.model_tag = scored->model_tag;
      } else if (report.model_tag != scored->model_tag) {
        return absl::InvalidArgumentError(StrCat("mixed model tags: ", report.model_tag,
                                                 " and ", scored->model_tag));
      }

      ReportColumn col;
      col.corpus = corpus;
      col.domain = pairing->domain;
      col.group_a = gp.a;
      col.group_b = gp.b;
      col.score_mode = options.score_mode;
      col.bucket_mode = options.bucket_mode.value_or(ResolveBucketMode(*pairing));
      for (Emotion e : kAllEmotions) {
        absl::StatusOr<MetricCell> cell =
            EvaluateCell(*scored, e, col.score_mode, col.bucket_mode, options.thresholds);
        if (!cell.ok()) return cell.status();
        col.cells[Index(e)] = *cell;
      }
      report.columns.push_back(std::move(col));
    }
  }
  return report;
}

}  // namespace affect_audit
