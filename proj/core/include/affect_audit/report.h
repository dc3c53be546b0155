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

#ifndef AFFECT_AUDIT_REPORT_H_
#define AFFECT_AUDIT_REPORT_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "affect_audit/bias_metrics.h"
#include "affect_audit/corpus_scan.h"
#include "affect_audit/labels.h"

namespace affect_audit {

enum class TableFormat { kMarkdown, kCsv };

// One corpus x group-pair column: a cell per emotion.
struct ReportColumn {
  std::string corpus;
  Domain domain = Domain::kGender;
  Group group_a = Group::kMale;
  Group group_b = Group::kFemale;
  ScoreMode score_mode = ScoreMode::kEmotionProbability;
  BucketMode bucket_mode = BucketMode::kGold;
  std::array<MetricCell, kNumEmotions> cells{};

  // "MxF" (file names, CSV) and "CSP M×F" (table headings).
  std::string PairingId() const;
  std::string Heading() const;

  friend bool operator==(const ReportColumn&, const ReportColumn&) = default;
};

struct BiasReport {
  std::string model_tag;
  Thresholds thresholds;
  std::vector<ReportColumn> columns;
  // Free-form provenance (corpus checksums, tool version). Not rendered in
  // the tables; written to the run manifest.
  std::map<std::string, std::string> metadata;

  friend bool operator==(const BiasReport&, const BiasReport&) = default;
};

// Markdown: one row per (emotion, measure), one column per ReportColumn. A
// DP cell is bolded when dp_below_threshold, a p-value cell when
// p_significant. CSV: long format, one line per (column, emotion), with the
// flags as explicit columns and doubles at full precision.
std::string RenderMetricTable(const BiasReport& report, TableFormat format);

// Inverse of the CSV rendering. Metadata is not part of the CSV.
absl::StatusOr<BiasReport> ParseMetricCsv(std::string_view csv);

// Number formatting shared by the markdown tables: "%.3f", switching to
// "%.1e" for magnitudes below 1e-3; null renders as "n/a".
std::string FormatMetric(std::optional<double> v);

struct NamedCooccurrence {
  std::string corpus;
  CooccurrenceTable table;
};

// Rows grouped by emotion, one per corpus; one column per group. Values use
// two decimals and a zero cell prints as "0". Within each domain, the
// row's largest (rounded) value is marked (bold in markdown, is_max in CSV);
// zero cells are never marked.
std::string RenderCooccurrenceTable(std::span<const NamedCooccurrence> tables,
                                    TableFormat format,
                                    std::span<const Group> groups = kAllGroups);

struct NamedOccurrence {
  std::string corpus;
  OccurrenceSummary summary;
};

std::string RenderOccurrenceTable(std::span<const NamedOccurrence> rows,
                                  TableFormat format);

// CSV "kind,pair_index,score_a,score_b": one "pair" row per bucket entry,
// then "mean_a" and "mean_b" rows.
absl::StatusOr<std::string> ExportIntensityScatter(const EmotionBucket& bucket);

// Minimal SVG of the same points (x = pair index, two series, dashed means).
absl::StatusOr<std::string> RenderIntensitySvg(const EmotionBucket& bucket,
                                               std::string_view label_a,
                                               std::string_view label_b);

// "<model_tag>_<domain>_<pairing>", with unsafe characters replaced.
std::string ReportFileStem(std::string_view model_tag, const ReportColumn& column);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_REPORT_H_
