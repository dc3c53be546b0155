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

#include "affect_audit/pair_corpus.h"
#include "affect_audit/str_util.h"

#include <set>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "affect_audit/checksum.h"
#include "affect_audit/csv.h"
#include "affect_audit/logging.h"
#include "affect_audit/text.h"

namespace affect_audit {
namespace {

constexpr std::string_view kNormalizedColumns[] = {
    "pair_id", "domain",      "group",       "sentence_id",
    "text",    "gold_emotion", "template_id", "corpus_tag"};

bool IsKnownField(std::string_view field) {
  for (std::string_view f : kNormalizedColumns) {
    if (f == field) return true;
  }
  return false;
}

}  // namespace

size_t IngestResult::dropped_total() const {
  size_t total = 0;
  for (const auto& [reason, n] : dropped) total += n;
  return total;
}

ColumnMapping ColumnMapping::Normalized() {
  ColumnMapping mapping;
  for (std::string_view f : kNormalizedColumns) {
    mapping.columns[std::string(f)] = std::string(f);
  }
  return mapping;
}

absl::StatusOr<ColumnMapping> ParseColumnMapping(std::string_view config) {
  ColumnMapping mapping;
  size_t line_no = 0;
  for (std::string_view raw : StrSplit(config, '\n')) {
    ++line_no;
    std::string_view line = StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      return absl::InvalidArgumentError(
          StrCat("mapping line ", line_no, ": expected key = value"));
    }
    const std::string key =
        AsciiStrToLower(StripAsciiWhitespace(line.substr(0, eq)));
    const std::string value(StripAsciiWhitespace(line.substr(eq + 1)));
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(
          StrCat("mapping line ", line_no, " (", key, "): ", what));
    };

    if (key == "delimiter") {
      const std::string lower = AsciiStrToLower(value);
      if (lower == "tab" || lower == "\\t") {
        mapping.delimiter = '\t';
      } else if (lower == "comma") {
        mapping.delimiter = ',';
      } else if (value.size() == 1) {
        mapping.delimiter = value[0];
      } else {
        return error("delimiter must be a single character, 'tab' or 'comma'");
      }
    } else if (StartsWith(key, "column.")) {
      const std::string field = key.substr(7);
      if (!IsKnownField(field)) return error("unknown field");
      if (value.empty()) return error("empty column name");
      mapping.columns[field] = value;
    } else if (key == "empty_gold_emotion") {
      const std::string lower = AsciiStrToLower(value);
      if (lower == "drop") {
        mapping.drop_empty_gold = true;
      } else if (lower == "absent") {
        mapping.drop_empty_gold = false;
      } else {
        return error("expected 'drop' or 'absent'");
      }
    } else if (key == "const.domain") {
      std::optional<Domain> domain = ParseDomain(value);
      if (!domain) return error(StrCat("unknown domain '", value, "'"));
      mapping.const_domain = domain;
    } else if (StartsWith(key, "value.group.")) {
      if (!ParseGroup(value)) return error(StrCat("unknown group '", value, "'"));
      mapping.group_values[key.substr(12)] = value;
    } else if (StartsWith(key, "value.emotion.")) {
      if (!ParseEmotion(value)) {
        return error(StrCat("unknown emotion '", value, "'"));
      }
      mapping.emotion_values[key.substr(14)] = value;
    } else {
      return error("unknown key");
    }
  }
  for (std::string_view required : {"pair_id", "group", "text"}) {
    if (!mapping.columns.contains(std::string(required))) {
      return absl::InvalidArgumentError(
          StrCat("mapping is missing column.", required));
    }
  }
  return mapping;
}

absl::StatusOr<ColumnMapping> LoadColumnMapping(const std::filesystem::path& path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  return ParseColumnMapping(*text);
}

absl::StatusOr<IngestResult> IngestCorpusFromString(std::string_view csv,
                                                    std::string_view corpus_tag,
                                                    const ColumnMapping& mapping) {
  absl::StatusOr<std::vector<CsvRow>> rows = ParseCsv(csv, mapping.delimiter);
  if (!rows.ok()) return rows.status();
  if (rows->empty()) return absl::InvalidArgumentError("pair corpus has no header row");

  const CsvRow& header = rows->front();
  StringMap<size_t> header_index;
  for (size_t i = 0; i < header.size(); ++i) {
    header_index[std::string(StripAsciiWhitespace(header[i]))] = i;
  }
  StringMap<size_t> field_index;
  for (const auto& [field, column] : mapping.columns) {
    auto it = header_index.find(column);
    if (it == header_index.end()) {
      return absl::InvalidArgumentError(StrCat(
          "missing mapped column '", column, "' (for field ", field, ")"));
    }
    field_index[field] = it->second;
  }
  auto field = [&](const CsvRow& row, std::string_view name) -> std::optional<std::string> {
    auto it = field_index.find(name);
    if (it == field_index.end()) return std::nullopt;
    return std::string(StripAsciiWhitespace(row[it->second]));
  };

  IngestResult result;
  std::set<std::tuple<std::string, std::string, Group>> seen_pairs;
  StringSet seen_sentence_ids;

  for (size_t r = 1; r < rows->size(); ++r) {
    const CsvRow& row = (*rows)[r];
    const size_t line = r + 1;
    if (row.size() == 1 && StripAsciiWhitespace(row[0]).empty()) continue;
    ++result.rows_in;
    if (row.size() != header.size()) {
      return absl::InvalidArgumentError(StrCat(
          "row ", line, ": expected ", header.size(), " fields, got ", row.size()));
    }
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(StrCat("row ", line, ": ", what));
    };

    PairRecord record;
    record.pair_id = *field(row, "pair_id");
    if (record.pair_id.empty()) return error("empty pair_id");

    const std::string raw_group = *field(row, "group");
    std::string group_label = raw_group;
    if (auto it = mapping.group_values.find(AsciiStrToLower(raw_group));
        it != mapping.group_values.end()) {
      group_label = it->second;
    }
    std::optional<Group> group = ParseGroup(group_label);
    if (!group) {
      ++result.dropped["group_out_of_scope"];
      continue;
    }
    record.group = *group;

    if (std::optional<std::string> gold = field(row, "gold_emotion")) {
      std::string label = *gold;
      if (auto it = mapping.emotion_values.find(AsciiStrToLower(label));
          it != mapping.emotion_values.end()) {
        label = it->second;
      }
      std::optional<Emotion> emotion = ParseEmotion(label);
      if (!emotion && !label.empty()) {
        ++result.dropped["emotion_out_of_scope"];
        continue;
      }
      if (!emotion && mapping.drop_empty_gold) {
        ++result.dropped["emotion_missing"];
        continue;
      }
      record.gold_emotion = emotion;
    }

    std::optional<std::string> domain_value = field(row, "domain");
    if (domain_value && !domain_value->empty()) {
      std::optional<Domain> domain = ParseDomain(*domain_value);
      if (!domain) return error(StrCat("unknown domain '", *domain_value, "'"));
      record.domain = *domain;
    } else if (mapping.const_domain) {
      record.domain = *mapping.const_domain;
    } else {
      record.domain = DomainOf(record.group);
    }
    if (DomainOf(record.group) != record.domain) {
      return error(StrCat("group ", GroupName(record.group),
                                " does not belong to domain ",
                                DomainName(record.domain)));
    }

    record.text = *field(row, "text");
    if (record.text.empty()) return error("empty text");

    if (std::optional<std::string> tmpl = field(row, "template_id");
        tmpl && !tmpl->empty()) {
      record.template_id = *tmpl;
    }
    std::optional<std::string> tag = field(row, "corpus_tag");
    record.corpus_tag = tag && !tag->empty()        ? *tag
                        : !corpus_tag.empty() ? std::string(corpus_tag)
                                              : std::string("custom");
    std::optional<std::string> sid = field(row, "sentence_id");
    record.sentence_id =
        sid && !sid->empty()
            ? *sid
            : StrCat(record.corpus_tag, ":", record.pair_id, ":",
                           GroupName(record.group));

    if (!seen_pairs.emplace(record.corpus_tag, record.pair_id, record.group).second) {
      return error(StrCat("duplicate (pair_id, group) = (", record.pair_id,
                                ", ", GroupName(record.group), ")"));
    }
    if (!seen_sentence_ids.insert(record.sentence_id).second) {
      return error(StrCat("duplicate sentence_id '", record.sentence_id, "'"));
    }
    result.records.push_back(std::move(record));
  }
  for (const auto& [reason, n] : result.dropped) {
    LogInfo(StrCat("ingest dropped ", n, " rows: ", reason));
  }
  return result;
}

absl::StatusOr<IngestResult> IngestCorpus(const std::filesystem::path& path,
                                          std::string_view corpus_tag,
                                          const ColumnMapping& mapping) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<IngestResult> result =
      IngestCorpusFromString(*text, corpus_tag, mapping);
  if (!result.ok()) {
    return absl::Status(result.status().code(),
                        StrCat(path.string(), ": ", StatusMessage(result.status())));
  }
  return result;
}

std::string WriteNormalizedCsv(const std::vector<PairRecord>& records) {
  std::string out = CsvLine(CsvRow(std::begin(kNormalizedColumns),
                                   std::end(kNormalizedColumns)));
  for (const PairRecord& r : records) {
    out += CsvLine({r.pair_id, std::string(DomainName(r.domain)),
                    std::string(GroupName(r.group)), r.sentence_id, r.text,
                    r.gold_emotion ? std::string(EmotionName(*r.gold_emotion)) : "",
                    r.template_id.value_or(""), r.corpus_tag});
  }
  return out;
}

absl::StatusOr<GroupPairing> BuildPairing(const std::vector<PairRecord>& records,
                                          Domain domain, Group g1, Group g2) {
  if (g1 == g2) return absl::InvalidArgumentError("pairing needs two distinct groups");
  if (DomainOf(g1) != domain || DomainOf(g2) != domain) {
    return absl::InvalidArgumentError(
        StrCat("groups ", GroupName(g1), " and ", GroupName(g2),
                     " are not both in domain ", DomainName(domain)));
  }
  using Key = std::pair<std::string, std::string>;
  std::map<Key, size_t> b_index;
  for (size_t i = 0; i < records.size(); ++i) {
    const PairRecord& r = records[i];
    if (r.domain == domain && r.group == g2) b_index[{r.corpus_tag, r.pair_id}] = i;
  }

  GroupPairing pairing;
  pairing.domain = domain;
  pairing.group_a = g1;
  pairing.group_b = g2;
  size_t matched_b = 0;
  for (const PairRecord& a : records) {
    if (a.domain != domain || a.group != g1) continue;
    auto it = b_index.find({a.corpus_tag, a.pair_id});
    if (it == b_index.end()) {
      ++pairing.excluded_a;
      continue;
    }
    const PairRecord& b = records[it->second];
    if (a.gold_emotion && b.gold_emotion && a.gold_emotion != b.gold_emotion) {
      return absl::InvalidArgumentError(StrCat(
          "pair ", a.pair_id, ": gold emotions differ between ", a.sentence_id,
          " and ", b.sentence_id));
    }
    if (a.template_id && b.template_id && a.template_id != b.template_id) {
      return absl::InvalidArgumentError(StrCat(
          "pair ", a.pair_id, ": template ids differ between ", a.sentence_id,
          " and ", b.sentence_id));
    }
    pairing.pairs.emplace_back(a, b);
    ++matched_b;
  }
  pairing.excluded_b = b_index.size() - matched_b;
  if (pairing.pairs.empty()) {
    return absl::FailedPreconditionError(
        StrCat("zero aligned pairs for ", DomainName(domain), " ",
                     GroupName(g1), " x ", GroupName(g2)));
  }
  if (pairing.excluded_a + pairing.excluded_b > 0) {
    LogInfo(StrCat(GroupName(g1), " x ", GroupName(g2), ": excluded ",
                         pairing.excluded_a, " + ", pairing.excluded_b,
                         " unpaired records"));
  }
  return pairing;
}

std::string_view VerdictName(MinimalPairVerdict::Kind kind) {
  switch (kind) {
    case MinimalPairVerdict::Kind::kMinimal:
      return "minimal";
    case MinimalPairVerdict::Kind::kNonMinimal:
      return "non-minimal";
    case MinimalPairVerdict::Kind::kLengthMismatch:
      return "length-mismatch";
  }
  return "?";
}

MinimalPairVerdict VerifyMinimalPair(std::string_view a, std::string_view b,
                                     const Lexicon& lexicon) {
  const std::vector<std::string> ta = Tokenize(a);
  const std::vector<std::string> tb = Tokenize(b);
  MinimalPairVerdict verdict;
  if (ta.size() != tb.size()) {
    verdict.kind = MinimalPairVerdict::Kind::kLengthMismatch;
    return verdict;
  }
  for (size_t i = 0; i < ta.size(); ++i) {
    if (ta[i] == tb[i]) continue;
    const bool both_targets = (lexicon.Lookup(ta[i]) & kGroupBits) != 0 &&
                              (lexicon.Lookup(tb[i]) & kGroupBits) != 0;
    if (!both_targets) verdict.diff_positions.push_back(i);
  }
  if (!verdict.diff_positions.empty()) {
    verdict.kind = MinimalPairVerdict::Kind::kNonMinimal;
  }
  return verdict;
}

}  // namespace affect_audit
