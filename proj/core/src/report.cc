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

#include "affect_audit/report.h"
#include "affect_audit/str_util.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "affect_audit/csv.h"
#include "affect_audit/stat_tests.h"

namespace affect_audit {
namespace {

constexpr std::array<std::string_view, 20> kMetricCsvHeader = {
    "model_tag", "corpus",       "domain",      "group_a",   "group_b",
    "emotion",   "score_mode",   "bucket_mode", "n_a",       "n_b",
    "n_pairs",   "dp",           "avg_delta",   "p_value",   "acs",
    "acs_skipped", "tau",        "alpha",       "dp_below_threshold",
    "p_significant"};

std::string Full(double v) { return StrFormat("%.17g", v); }

std::string FullOpt(const std::optional<double>& v) { return v ? Full(*v) : ""; }

std::string Bold(std::string s) { return StrCat("**", s, "**"); }

std::string MarkdownRow(const std::vector<std::string>& cells) {
  return StrCat("| ", StrJoin(cells, " | "), " |\n");
}

std::string MarkdownRule(size_t text_columns, size_t numeric_columns) {
  std::vector<std::string> cells(text_columns, "---");
  cells.resize(text_columns + numeric_columns, "---:");
  return StrCat("|", StrJoin(cells, "|"), "|\n");
}

absl::StatusOr<double> ParseDouble(std::string_view s, std::string_view field) {
  double v = 0.0;
  if (!SimpleAtod(s, &v)) {
    return absl::InvalidArgumentError(StrCat("bad number in ", field, ": '", s, "'"));
  }
  return v;
}

absl::StatusOr<size_t> ParseCount(std::string_view s, std::string_view field) {
  uint64_t v = 0;
  if (!SimpleAtoi(s, &v)) {
    return absl::InvalidArgumentError(StrCat("bad count in ", field, ": '", s, "'"));
  }
  return static_cast<size_t>(v);
}

absl::StatusOr<bool> ParseFlag(std::string_view s, std::string_view field) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  return absl::InvalidArgumentError(StrCat("bad flag in ", field, ": '", s, "'"));
}

std::string FormatPercent(double v) {
  if (v == 0.0) return "0";
  return StrFormat("%.2f", v);
}

}  // namespace

std::string ReportColumn::PairingId() const {
  return StrCat(GroupName(group_a), "x", GroupName(group_b));
}

std::string ReportColumn::Heading() const {
  std::string pair = StrCat(GroupName(group_a), "×", GroupName(group_b));
  return corpus.empty() ? pair : StrCat(corpus, " ", pair);
}

std::string FormatMetric(std::optional<double> v) {
  if (!v) return "n/a";
  if (*v != 0.0 && std::fabs(*v) < 1e-3) return StrFormat("%.1e", *v);
  return StrFormat("%.3f", *v);
}

std::string RenderMetricTable(const BiasReport& report, TableFormat format) {
  std::string out;
  if (format == TableFormat::kCsv) {
    out += CsvLine(CsvRow(kMetricCsvHeader.begin(), kMetricCsvHeader.end()));
    for (const ReportColumn& col : report.columns) {
      for (const MetricCell& cell : col.cells) {
        out += CsvLine({report.model_tag, col.corpus, std::string(DomainName(col.domain)),
                        std::string(GroupName(col.group_a)),
                        std::string(GroupName(col.group_b)),
                        std::string(EmotionName(cell.emotion)),
                        std::string(ScoreModeName(col.score_mode)),
                        std::string(BucketModeName(col.bucket_mode)),
                        StrCat(cell.n_a), StrCat(cell.n_b),
                        StrCat(cell.n_pairs), Full(cell.dp),
                        FullOpt(cell.avg_delta), FullOpt(cell.p_value),
                        FullOpt(cell.acs), StrCat(cell.acs_skipped),
                        Full(report.thresholds.tau), Full(report.thresholds.alpha),
                        cell.dp_below_threshold ? "1" : "0",
                        cell.p_significant ? "1" : "0"});
      }
    }
    return out;
  }

  std::vector<std::string> header = {"Emotion", "Measure"};
  for (const ReportColumn& col : report.columns) header.push_back(col.Heading());
  out += MarkdownRow(header);
  out += MarkdownRule(2, report.columns.size());
  if (report.columns.empty()) return out;

  for (Emotion e : kAllEmotions) {
    const size_t ei = Index(e);
    std::vector<std::string> dp = {std::string(EmotionTitle(e)), "DP"};
    std::vector<std::string> delta = {"", "avg.Δ"};
    std::vector<std::string> p = {"", "p-value"};
    std::vector<std::string> acs = {"", "ACS"};
    for (const ReportColumn& col : report.columns) {
      const MetricCell& cell = col.cells[ei];
      std::string dp_text = FormatMetric(cell.dp);
      dp.push_back(cell.dp_below_threshold ? Bold(dp_text) : dp_text);
      delta.push_back(FormatMetric(cell.avg_delta));
      std::string p_text = FormatMetric(cell.p_value);
      p.push_back(cell.p_significant ? Bold(p_text) : p_text);
      acs.push_back(FormatMetric(cell.acs));
    }
    out += MarkdownRow(dp);
    out += MarkdownRow(delta);
    out += MarkdownRow(p);
    out += MarkdownRow(acs);
  }
  return out;
}

absl::StatusOr<BiasReport> ParseMetricCsv(std::string_view csv) {
  absl::StatusOr<std::vector<CsvRow>> rows = ParseCsv(csv);
  if (!rows.ok()) return rows.status();
  if (rows->empty()) return absl::InvalidArgumentError("metric CSV has no header");
  const CsvRow& header = rows->front();
  if (header != CsvRow(kMetricCsvHeader.begin(), kMetricCsvHeader.end())) {
    return absl::InvalidArgumentError("metric CSV header does not match the schema");
  }

  BiasReport report;
  bool have_thresholds = false;
  // Columns are keyed by everything but the emotion, in order of appearance.
  std::vector<std::array<bool, kNumEmotions>> seen;
  for (size_t r = 1; r < rows->size(); ++r) {
    const CsvRow& row = (*rows)[r];
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(StrCat("metric CSV row ", r + 1, ": ", what));
    };
    if (row.size() != kMetricCsvHeader.size()) {
      return error(StrCat("expected ", kMetricCsvHeader.size(), " fields, got ",
                                row.size()));
    }
    std::optional<Domain> domain = ParseDomain(row[2]);
    std::optional<Group> ga = ParseGroup(row[3]);
    std::optional<Group> gb = ParseGroup(row[4]);
    std::optional<Emotion> emotion = ParseEmotion(row[5]);
    std::optional<ScoreMode> score_mode = ParseScoreMode(row[6]);
    std::optional<BucketMode> bucket_mode = ParseBucketMode(row[7]);
    if (!domain || !ga || !gb || !emotion || !score_mode || !bucket_mode) {
      return error("unknown label");
    }

    MetricCell cell;
    cell.emotion = *emotion;
    auto assign_count = [&](size_t idx, size_t& dst) -> absl::Status {
      absl::StatusOr<size_t> v = ParseCount(row[idx], kMetricCsvHeader[idx]);
      if (!v.ok()) return v.status();
      dst = *v;
      return absl::OkStatus();
    };
    auto assign_opt = [&](size_t idx, std::optional<double>& dst) -> absl::Status {
      if (row[idx].empty()) return absl::OkStatus();
      absl::StatusOr<double> v = ParseDouble(row[idx], kMetricCsvHeader[idx]);
      if (!v.ok()) return v.status();
      dst = *v;
      return absl::OkStatus();
    };
    std::optional<double> dp, tau, alpha;
    for (absl::Status s :
         {assign_count(8, cell.n_a), assign_count(9, cell.n_b),
          assign_count(10, cell.n_pairs), assign_opt(11, dp),
          assign_opt(12, cell.avg_delta), assign_opt(13, cell.p_value),
          assign_opt(14, cell.acs), assign_count(15, cell.acs_skipped),
          assign_opt(16, tau), assign_opt(17, alpha)}) {
      if (!s.ok()) return error(StatusMessage(s));
    }
    if (!dp || !tau || !alpha) return error("dp, tau and alpha are required");
    cell.dp = *dp;
    absl::StatusOr<bool> f1 = ParseFlag(row[18], kMetricCsvHeader[18]);
    absl::StatusOr<bool> f2 = ParseFlag(row[19], kMetricCsvHeader[19]);
    if (!f1.ok()) return error(StatusMessage(f1.status()));
    if (!f2.ok()) return error(StatusMessage(f2.status()));
    cell.dp_below_threshold = *f1;
    cell.p_significant = *f2;

    if (!have_thresholds) {
      report.model_tag = row[0];
      report.thresholds = {*tau, *alpha};
      have_thresholds = true;
    } else if (row[0] != report.model_tag || *tau != report.thresholds.tau ||
               *alpha != report.thresholds.alpha) {
      return error("model_tag and thresholds must be uniform across rows");
    }

    auto it = std::find_if(report.columns.begin(), report.columns.end(),
                           [&](const ReportColumn& c) {
                             return c.corpus == row[1] && c.domain == *domain &&
                                    c.group_a == *ga && c.group_b == *gb &&
                                    c.score_mode == *score_mode &&
                                    c.bucket_mode == *bucket_mode;
                           });
    if (it == report.columns.end()) {
      ReportColumn col;
      col.corpus = row[1];
      col.domain = *domain;
      col.group_a = *ga;
      col.group_b = *gb;
      col.score_mode = *score_mode;
      col.bucket_mode = *bucket_mode;
      for (Emotion e : kAllEmotions) col.cells[Index(e)].emotion = e;
      report.columns.push_back(std::move(col));
      seen.emplace_back();
      it = report.columns.end() - 1;
    }
    const size_t ci = static_cast<size_t>(it - report.columns.begin());
    if (seen[ci][Index(*emotion)]) return error("duplicate cell");
    seen[ci][Index(*emotion)] = true;
    it->cells[Index(*emotion)] = cell;
  }
  for (size_t ci = 0; ci < seen.size(); ++ci) {
    for (Emotion e : kAllEmotions) {
      if (!seen[ci][Index(e)]) {
        return absl::InvalidArgumentError(
            StrCat("metric CSV column ", report.columns[ci].Heading(),
                         " has no ", EmotionName(e), " row"));
      }
    }
  }
  return report;
}

std::string RenderCooccurrenceTable(std::span<const NamedCooccurrence> tables,
                                    TableFormat format, std::span<const Group> groups) {
  // marked[t][e][g]: rounded value is the row maximum within g's domain.
  auto is_max = [&](const CooccurrenceTable& table, Emotion e, Group g) {
    const double v = table.Pct(e, g);
    if (v == 0.0) return false;
    const std::string mine = FormatPercent(v);
    double best = 0.0;
    for (Group other : groups) {
      if (DomainOf(other) != DomainOf(g)) continue;
      best = std::max(best, std::stod(FormatPercent(table.Pct(e, other))));
    }
    return std::stod(mine) == best;
  };

  std::string out;
  if (format == TableFormat::kCsv) {
    out += CsvLine({"corpus", "emotion", "group", "percent", "column_total", "is_max"});
    for (Emotion e : kAllEmotions) {
      for (const NamedCooccurrence& t : tables) {
        for (Group g : groups) {
          out += CsvLine({t.corpus, std::string(EmotionName(e)), std::string(GroupName(g)),
                          FormatPercent(t.table.Pct(e, g)),
                          StrCat(t.table.column_totals[Index(g)]),
                          is_max(t.table, e, g) ? "1" : "0"});
        }
      }
    }
    return out;
  }

  std::vector<std::string> header = {"Emotion", "Corpus"};
  for (Group g : groups) header.emplace_back(GroupName(g));
  out += MarkdownRow(header);
  out += MarkdownRule(2, groups.size());
  for (Emotion e : kAllEmotions) {
    bool first = true;
    for (const NamedCooccurrence& t : tables) {
      std::vector<std::string> row = {first ? std::string(EmotionTitle(e)) : "", t.corpus};
      first = false;
      for (Group g : groups) {
        std::string text = FormatPercent(t.table.Pct(e, g));
        row.push_back(is_max(t.table, e, g) ? Bold(text) : text);
      }
      out += MarkdownRow(row);
    }
  }
  return out;
}

std::string RenderOccurrenceTable(std::span<const NamedOccurrence> rows,
                                  TableFormat format) {
  std::vector<std::string> header = {"Corpus"};
  for (Emotion e : kAllEmotions) header.emplace_back(EmotionTitle(e));
  header.emplace_back("Total");
  header.emplace_back("Std.Dev");
  std::string out;
  if (format == TableFormat::kCsv) {
    out += CsvLine({"corpus", "anger", "fear", "joy", "sadness", "total", "stddev"});
  } else {
    out += MarkdownRow(header);
    out += MarkdownRule(1, header.size() - 1);
  }
  for (const NamedOccurrence& r : rows) {
    std::vector<std::string> row = {r.corpus};
    for (uint64_t v : r.summary.occ) row.push_back(StrCat(v));
    row.push_back(StrCat(r.summary.total_affective));
    if (format == TableFormat::kCsv) {
      row.push_back(Full(r.summary.stddev));
      out += CsvLine(row);
    } else {
      row.push_back(StrFormat("%.2f", r.summary.stddev));
      out += MarkdownRow(row);
    }
  }
  return out;
}

absl::StatusOr<std::string> ExportIntensityScatter(const EmotionBucket& bucket) {
  if (bucket.empty()) return absl::InvalidArgumentError("scatter of an empty bucket");
  std::string out = CsvLine({"kind", "pair_index", "score_a", "score_b"});
  for (size_t i = 0; i < bucket.size(); ++i) {
    out += CsvLine({"pair", StrCat(bucket.pair_indices[i]), Full(bucket.score_a[i]),
                    Full(bucket.score_b[i])});
  }
  const double n = static_cast<double>(bucket.size());
  out += CsvLine({"mean_a", "", Full(CompensatedSum(bucket.score_a) / n), ""});
  out += CsvLine({"mean_b", "", "", Full(CompensatedSum(bucket.score_b) / n)});
  return out;
}

absl::StatusOr<std::string> RenderIntensitySvg(const EmotionBucket& bucket,
                                               std::string_view label_a,
                                               std::string_view label_b) {
  if (bucket.empty()) return absl::InvalidArgumentError("scatter of an empty bucket");
  constexpr double kWidth = 640, kHeight = 320, kMargin = 40;
  const double n = static_cast<double>(bucket.size());
  auto x = [&](size_t i) {
    return kMargin + (n <= 1 ? 0.5 : static_cast<double>(i) / (n - 1)) *
                         (kWidth - 2 * kMargin);
  };
  auto y = [&](double s) { return kHeight - kMargin - s * (kHeight - 2 * kMargin); };

  std::string out = StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
      "viewBox=\"0 0 %.0f %.0f\">\n",
      kWidth, kHeight, kWidth, kHeight);
  StrAppendFormat(&out,
                        "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" "
                        "fill=\"none\" stroke=\"#888\"/>\n",
                        kMargin, kMargin, kWidth - 2 * kMargin, kHeight - 2 * kMargin);
  StrAppendFormat(&out, "<text x=\"%.0f\" y=\"20\" font-size=\"12\">%s: %s (blue) vs %s (red)</text>\n",
                        kMargin, EmotionName(bucket.emotion), label_a, label_b);
  struct Series {
    const std::vector<double>* scores;
    const char* color;
  };
  for (const Series& s : {Series{&bucket.score_a, "#1f77b4"}, Series{&bucket.score_b, "#d62728"}}) {
    for (size_t i = 0; i < s.scores->size(); ++i) {
      StrAppendFormat(&out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"%s\"/>\n",
                            x(i), y((*s.scores)[i]), s.color);
    }
    const double mean = CompensatedSum(*s.scores) / n;
    StrAppendFormat(&out,
                          "<line x1=\"%.0f\" x2=\"%.0f\" y1=\"%.2f\" y2=\"%.2f\" "
                          "stroke=\"%s\" stroke-dasharray=\"4 3\"/>\n",
                          kMargin, kWidth - kMargin, y(mean), y(mean), s.color);
  }
  out += "</svg>\n";
  return out;
}

std::string ReportFileStem(std::string_view model_tag, const ReportColumn& column) {
  std::string stem = StrCat(model_tag, "_", DomainName(column.domain), "_",
                                  column.corpus.empty() ? "" : StrCat(column.corpus, "-"),
                                  column.PairingId());
  for (char& c : stem) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
    if (!ok) c = '-';
  }
  return stem;
}

}  // namespace affect_audit
