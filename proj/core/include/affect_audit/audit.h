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

#ifndef AFFECT_AUDIT_AUDIT_H_
#define AFFECT_AUDIT_AUDIT_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "affect_audit/bias_metrics.h"
#include "affect_audit/labels.h"
#include "affect_audit/pair_corpus.h"
#include "affect_audit/prediction_io.h"
#include "affect_audit/report.h"

namespace affect_audit {

struct AuditOptions {
  ScoreMode score_mode = ScoreMode::kEmotionProbability;
  // Unset: resolved per pairing (gold when every pair has a gold label).
  std::optional<BucketMode> bucket_mode;
  Thresholds thresholds;
  // Empty means kStandardPairings.
  std::vector<GroupPair> pairings;
};

// Evaluates every (corpus_tag, pairing) with both groups present, corpora in
// order of first appearance. Every sentence of an evaluated pairing needs a
// prediction, and all predictions must share one model tag.
absl::StatusOr<BiasReport> RunAudit(const std::vector<PairRecord>& records,
                                    const std::vector<Prediction>& predictions,
                                    const AuditOptions& options);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_AUDIT_H_
