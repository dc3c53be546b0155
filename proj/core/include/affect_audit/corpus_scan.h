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

#ifndef AFFECT_AUDIT_CORPUS_SCAN_H_
#define AFFECT_AUDIT_CORPUS_SCAN_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "affect_audit/labels.h"
#include "affect_audit/lexicon.h"
#include "affect_audit/text.h"

namespace affect_audit {

// Sentence mode counts an emotion at most once per sentence. Token mode
// additionally counts every matching emotion token toward occ; co-occurrence
// stays sentence-level in both modes.
enum class CountingMode { kSentence, kToken };

// Occurrence and co-occurrence counters. All fields are sums, so Merge is
// associative and commutative and the result does not depend on shard order.
struct AffectCounts {
  std::array<uint64_t, kNumEmotions> occ{};
  std::array<std::array<uint64_t, kNumGroups>, kNumEmotions> coocc{};
  uint64_t sentences_scanned = 0;
  uint64_t tokens_scanned = 0;
  uint64_t documents_scanned = 0;
  uint64_t bytes_scanned = 0;
  uint64_t decode_replacements = 0;

  uint64_t Occ(Emotion e) const { return occ[Index(e)]; }
  uint64_t Coocc(Emotion e, Group g) const { return coocc[Index(e)][Index(g)]; }

  void Merge(const AffectCounts& other);

  friend bool operator==(const AffectCounts&, const AffectCounts&) = default;
};

// Deterministic JSON with fixed key order.
std::string AffectCountsToJson(const AffectCounts& counts, CountingMode mode);
absl::StatusOr<AffectCounts> AffectCountsFromJson(std::string_view json);

// Applies one sentence's tokens to `counts`: each emotion present adds 1 to
// occ, and each (present emotion, present group) adds 1 to coocc.
void ScanSentence(const Lexicon& lexicon, std::span<const std::string> tokens,
                  CountingMode mode, AffectCounts& counts);

// Segments and tokenizes one document (one input line) and scans every
// sentence. Reuses internal buffers; one scanner per thread.
class DocumentScanner {
 public:
  DocumentScanner(const Lexicon& lexicon, CountingMode mode)
      : lexicon_(lexicon), mode_(mode) {}

  void ScanDocument(std::string_view document, AffectCounts& counts);

 private:
  const Lexicon& lexicon_;
  CountingMode mode_;
  TokenCursor cursor_;
};

// Input files in scan order: plain files as given, directories expanded
// recursively to .txt / .txt.gz / .gz files sorted by path.
struct CorpusSource {
  std::vector<std::filesystem::path> files;
};

absl::StatusOr<CorpusSource> ResolveCorpusSource(
    std::span<const std::filesystem::path> inputs);

struct ScanOptions {
  int workers = 1;
  CountingMode mode = CountingMode::kSentence;
  // Target size of one shard handed to a worker. Shards always end on a
  // line boundary.
  size_t shard_bytes = 1 << 20;
};

// Scans every line of every file. Gzip input is decompressed transparently.
// The result is independent of `workers` and `shard_bytes`.
absl::StatusOr<AffectCounts> ScanCorpus(const Lexicon& lexicon,
                                        const CorpusSource& source,
                                        const ScanOptions& options);

// Scans an in-memory corpus (one document per line) on the calling thread.
AffectCounts ScanText(const Lexicon& lexicon, std::string_view corpus,
                      CountingMode mode);

// Per-emotion occurrence counts with their total and sample standard
// deviation (divisor N - 1).
struct OccurrenceSummary {
  std::array<uint64_t, kNumEmotions> occ{};
  uint64_t total_affective = 0;
  double stddev = 0.0;
};

OccurrenceSummary SummarizeOccurrence(const AffectCounts& counts);

// Per group column: percentage of that group's co-occurrences falling on
// each emotion. Columns with no co-occurrence are all zero.
struct CooccurrenceTable {
  std::array<std::array<double, kNumEmotions>, kNumGroups> pct{};
  std::array<uint64_t, kNumGroups> column_totals{};

  double Pct(Emotion e, Group g) const { return pct[Index(g)][Index(e)]; }
};

CooccurrenceTable CooccurrencePercentages(const AffectCounts& counts);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_CORPUS_SCAN_H_
