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

#ifndef AFFECT_AUDIT_PAIR_CORPUS_H_
#define AFFECT_AUDIT_PAIR_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "affect_audit/labels.h"
#include "affect_audit/lexicon.h"

namespace affect_audit {

// One evaluation sentence, tagged with the pair it belongs to.
struct PairRecord {
  std::string pair_id;
  Domain domain = Domain::kGender;
  Group group = Group::kMale;
  std::string sentence_id;
  std::string text;
  std::optional<Emotion> gold_emotion;
  std::optional<std::string> template_id;
  std::string corpus_tag;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

// Where each normalized field lives in a source CSV, plus value aliases.
//
// Config file (key = value, '#' comments):
//
//   delimiter = tab              # or a single character; default ','
//   column.pair_id = ID          # required
//   column.group = Gender        # required
//   column.text = Sentence       # required
//   column.domain = ...          # optional; else const.domain, else inferred
//   column.sentence_id = ...     # optional; else <corpus>:<pair_id>:<group>
//   column.gold_emotion = Emotion
//   column.template_id = Template
//   column.corpus_tag = ...
//   const.domain = gender
//   value.group.male = M         # source value -> group label
//   value.emotion.happiness = joy
//   empty_gold_emotion = drop    # or 'absent' (default): how to treat an
//                                # empty gold cell
//
// Group values without an alias are parsed as group labels ("M", "female",
// "African-American", ...). Rows whose group does not resolve, or whose
// gold emotion is not one of the four emotions, are dropped and counted.
struct ColumnMapping {
  char delimiter = ',';
  std::map<std::string, std::string> columns;  // field -> source column
  std::optional<Domain> const_domain;
  bool drop_empty_gold = false;
  std::map<std::string, std::string> group_values;    // lowercase source -> label
  std::map<std::string, std::string> emotion_values;  // lowercase source -> label

  // The identity mapping for the normalized schema written by
  // WriteNormalizedCsv.
  static ColumnMapping Normalized();
};

absl::StatusOr<ColumnMapping> ParseColumnMapping(std::string_view config);
absl::StatusOr<ColumnMapping> LoadColumnMapping(const std::filesystem::path& path);

struct IngestResult {
  std::vector<PairRecord> records;
  size_t rows_in = 0;
  std::map<std::string, size_t> dropped;  // reason -> rows

  size_t dropped_total() const;
};

absl::StatusOr<IngestResult> IngestCorpusFromString(std::string_view csv,
                                                    std::string_view corpus_tag,
                                                    const ColumnMapping& mapping);
absl::StatusOr<IngestResult> IngestCorpus(const std::filesystem::path& path,
                                          std::string_view corpus_tag,
                                          const ColumnMapping& mapping);

// Normalized CSV: pair_id,domain,group,sentence_id,text,gold_emotion,
// template_id,corpus_tag.
std::string WriteNormalizedCsv(const std::vector<PairRecord>& records);

// Sentence pairs for g1 x g2, aligned on (corpus_tag, pair_id), ordered by
// first appearance on the g1 side.
struct GroupPairing {
  Domain domain = Domain::kGender;
  Group group_a = Group::kMale;
  Group group_b = Group::kFemale;
  std::vector<std::pair<PairRecord, PairRecord>> pairs;
  size_t excluded_a = 0;  // g1 records with no g2 partner
  size_t excluded_b = 0;

  size_t size() const { return pairs.size(); }
};

absl::StatusOr<GroupPairing> BuildPairing(const std::vector<PairRecord>& records,
                                          Domain domain, Group g1, Group g2);

struct MinimalPairVerdict {
  enum class Kind { kMinimal, kNonMinimal, kLengthMismatch };
  Kind kind = Kind::kMinimal;
  // Token positions that differ and are not target terms on both sides.
  std::vector<size_t> diff_positions;
};

std::string_view VerdictName(MinimalPairVerdict::Kind kind);

// Whether two sentences differ only at positions where both tokens are
// target terms. Advisory; not an ingest gate.
MinimalPairVerdict VerifyMinimalPair(std::string_view a, std::string_view b,
                                     const Lexicon& lexicon);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_PAIR_CORPUS_H_
