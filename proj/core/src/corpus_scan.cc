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

#include "affect_audit/corpus_scan.h"
#include "affect_audit/str_util.h"

#include <zlib.h>

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include "absl/status/status.h"
#include "affect_audit/stat_tests.h"
#include "affect_audit/text.h"
#include "json.hpp"

namespace affect_audit {
namespace {

using ordered_json = nlohmann::ordered_json;

// Folds one sentence's membership into the counters.
inline void ApplySentence(LabelMask sentence_mask,
                          const std::array<uint32_t, kNumEmotions>& emotion_hits,
                          CountingMode mode, AffectCounts& counts) {
  ++counts.sentences_scanned;
  if ((sentence_mask & kEmotionBits) == 0) return;
  for (size_t e = 0; e < kNumEmotions; ++e) {
    if ((sentence_mask & (1u << e)) == 0) continue;
    counts.occ[e] += mode == CountingMode::kToken ? emotion_hits[e] : 1;
    if ((sentence_mask & kGroupBits) == 0) continue;
    for (size_t g = 0; g < kNumGroups; ++g) {
      if (sentence_mask & (1u << (kNumEmotions + g))) ++counts.coocc[e][g];
    }
  }
}

inline void AccumulateToken(LabelMask mask, LabelMask& sentence_mask,
                            std::array<uint32_t, kNumEmotions>& emotion_hits) {
  sentence_mask |= mask;
  if (mask & kEmotionBits) {
    for (size_t e = 0; e < kNumEmotions; ++e) {
      if (mask & (1u << e)) ++emotion_hits[e];
    }
  }
}

void ScanShard(DocumentScanner& scanner, std::string_view shard,
               AffectCounts& counts) {
  size_t pos = 0;
  while (pos < shard.size()) {
    size_t end = shard.find('\n', pos);
    if (end == std::string_view::npos) end = shard.size();
    std::string_view line = shard.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    scanner.ScanDocument(line, counts);
    pos = end + 1;
  }
}

// Fixed-capacity queue of shards between the reader and the workers.
class ShardQueue {
 public:
  explicit ShardQueue(size_t capacity) : capacity_(capacity) {}

  void Push(std::string shard) {
    std::unique_lock<std::mutex> lock(mu_);
    not_full_.wait(lock, [&] { return items_.size() < capacity_; });
    items_.push_back(std::move(shard));
    not_empty_.notify_one();
  }

  std::optional<std::string> Pop() {
    std::unique_lock<std::mutex> lock(mu_);
    not_empty_.wait(lock, [&] { return !items_.empty() || closed_; });
    if (items_.empty()) return std::nullopt;
    std::string shard = std::move(items_.front());
    items_.pop_front();
    not_full_.notify_one();
    return shard;
  }

  void Close() {
    std::lock_guard<std::mutex> lock(mu_);
    closed_ = true;
    not_empty_.notify_all();
  }

 private:
  const size_t capacity_;
  std::mutex mu_;
  std::condition_variable not_empty_;
  std::condition_variable not_full_;
  std::deque<std::string> items_;
  bool closed_ = false;
};

struct GzCloser {
  void operator()(gzFile_s* f) const {
    if (f != nullptr) gzclose(f);
  }
};

// Reads `path` (plain or gzip) and hands out shards ending on line
// boundaries. The final shard may lack a trailing newline.
template <typename Sink>
absl::Status ReadShards(const std::filesystem::path& path, size_t shard_bytes,
                        Sink&& sink) {
  std::unique_ptr<gzFile_s, GzCloser> file(gzopen(path.c_str(), "rb"));
  if (!file) {
    return absl::NotFoundError(StrCat("cannot open corpus file ", path.string()));
  }
  gzbuffer(file.get(), 1 << 18);
  std::string carry;
  std::string block;
  const size_t chunk = std::max<size_t>(shard_bytes, 4096);
  while (true) {
    block.resize(carry.size() + chunk);
    std::copy(carry.begin(), carry.end(), block.begin());
    const int n = gzread(file.get(), block.data() + carry.size(),
                         static_cast<unsigned>(chunk));
    if (n < 0) {
      int errnum = 0;
      const char* msg = gzerror(file.get(), &errnum);
      return absl::DataLossError(
          StrCat("read error in ", path.string(), ": ", msg ? msg : "?"));
    }
    block.resize(carry.size() + static_cast<size_t>(n));
    carry.clear();
    if (n == 0) {
      if (!block.empty()) sink(std::move(block));
      return absl::OkStatus();
    }
    const size_t last_newline = block.rfind('\n');
    if (last_newline == std::string::npos) {
      carry = std::move(block);  // one line longer than the chunk
      block = std::string();
      continue;
    }
    carry.assign(block, last_newline + 1, std::string::npos);
    block.resize(last_newline + 1);
    sink(std::move(block));
    block = std::string();
  }
}

}  // namespace

void AffectCounts::Merge(const AffectCounts& other) {
  for (size_t e = 0; e < kNumEmotions; ++e) {
    occ[e] += other.occ[e];
    for (size_t g = 0; g < kNumGroups; ++g) coocc[e][g] += other.coocc[e][g];
  }
  sentences_scanned += other.sentences_scanned;
  tokens_scanned += other.tokens_scanned;
  documents_scanned += other.documents_scanned;
  bytes_scanned += other.bytes_scanned;
  decode_replacements += other.decode_replacements;
}

std::string AffectCountsToJson(const AffectCounts& counts, CountingMode mode) {
  ordered_json j;
  j["mode"] = mode == CountingMode::kToken ? "token" : "sentence";
  j["documents_scanned"] = counts.documents_scanned;
  j["sentences_scanned"] = counts.sentences_scanned;
  j["tokens_scanned"] = counts.tokens_scanned;
  j["bytes_scanned"] = counts.bytes_scanned;
  j["decode_replacements"] = counts.decode_replacements;
  ordered_json occ = ordered_json::object();
  ordered_json coocc = ordered_json::object();
  for (Emotion e : kAllEmotions) {
    occ[std::string(EmotionName(e))] = counts.Occ(e);
    ordered_json row = ordered_json::object();
    for (Group g : kAllGroups) {
      row[std::string(GroupName(g))] = counts.Coocc(e, g);
    }
    coocc[std::string(EmotionName(e))] = std::move(row);
  }
  j["occ"] = std::move(occ);
  j["coocc"] = std::move(coocc);
  return j.dump(2) + "\n";
}

absl::StatusOr<AffectCounts> AffectCountsFromJson(std::string_view json) {
  try {
    const ordered_json j = ordered_json::parse(json);
    AffectCounts counts;
    counts.documents_scanned = j.at("documents_scanned").get<uint64_t>();
    counts.sentences_scanned = j.at("sentences_scanned").get<uint64_t>();
    counts.tokens_scanned = j.at("tokens_scanned").get<uint64_t>();
    counts.bytes_scanned = j.at("bytes_scanned").get<uint64_t>();
    counts.decode_replacements = j.at("decode_replacements").get<uint64_t>();
    for (Emotion e : kAllEmotions) {
      const std::string name(EmotionName(e));
      counts.occ[Index(e)] = j.at("occ").at(name).get<uint64_t>();
      for (Group g : kAllGroups) {
        counts.coocc[Index(e)][Index(g)] =
            j.at("coocc").at(name).at(std::string(GroupName(g))).get<uint64_t>();
      }
    }
    return counts;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(StrCat("bad counts JSON: ", e.what()));
  }
}

void ScanSentence(const Lexicon& lexicon, std::span<const std::string> tokens,
                  CountingMode mode, AffectCounts& counts) {
  LabelMask sentence_mask = 0;
  std::array<uint32_t, kNumEmotions> hits{};
  for (const std::string& token : tokens) {
    AccumulateToken(lexicon.Lookup(token), sentence_mask, hits);
  }
  counts.tokens_scanned += tokens.size();
  ApplySentence(sentence_mask, hits, mode, counts);
}

void DocumentScanner::ScanDocument(std::string_view document,
                                   AffectCounts& counts) {
  ++counts.documents_scanned;
  counts.bytes_scanned += document.size();
  // Ill-formed bytes are already separators for the tokenizer; they are
  // only counted here.
  counts.decode_replacements += RepairUtf8(document, nullptr);

  ForEachSentence(document, [&](std::string_view sentence) {
    LabelMask sentence_mask = 0;
    std::array<uint32_t, kNumEmotions> hits{};
    uint64_t tokens = 0;
    cursor_.ForEach(sentence, [&](std::string_view token) {
      ++tokens;
      AccumulateToken(lexicon_.Lookup(token), sentence_mask, hits);
    });
    counts.tokens_scanned += tokens;
    ApplySentence(sentence_mask, hits, mode_, counts);
  });
}

absl::StatusOr<CorpusSource> ResolveCorpusSource(
    std::span<const std::filesystem::path> inputs) {
  namespace fs = std::filesystem;
  CorpusSource source;
  for (const fs::path& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> found;
      for (auto it = fs::recursive_directory_iterator(input, ec);
           !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (!it->is_regular_file()) continue;
        const std::string name = it->path().filename().string();
        auto ends_with = [&](std::string_view suffix) {
          return name.size() >= suffix.size() &&
                 name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
        };
        if (ends_with(".txt") || ends_with(".gz")) found.push_back(it->path());
      }
      if (ec) {
        return absl::PermissionDeniedError(
            StrCat("cannot walk ", input.string(), ": ", ec.message()));
      }
      std::sort(found.begin(), found.end());
      source.files.insert(source.files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(input, ec)) {
      source.files.push_back(input);
    } else {
      return absl::NotFoundError(StrCat("corpus input not found: ", input.string()));
    }
  }
  return source;
}

absl::StatusOr<AffectCounts> ScanCorpus(const Lexicon& lexicon,
                                        const CorpusSource& source,
                                        const ScanOptions& options) {
  if (options.workers < 1) {
    return absl::InvalidArgumentError("workers must be positive");
  }
  if (options.workers == 1) {
    AffectCounts counts;
    DocumentScanner scanner(lexicon, options.mode);
    for (const std::filesystem::path& file : source.files) {
      absl::Status status = ReadShards(file, options.shard_bytes, [&](std::string shard) {
        ScanShard(scanner, shard, counts);
      });
      if (!status.ok()) return status;
    }
    return counts;
  }

  const size_t workers = static_cast<size_t>(options.workers);
  ShardQueue queue(2 * workers);
  std::vector<AffectCounts> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      DocumentScanner scanner(lexicon, options.mode);
      while (std::optional<std::string> shard = queue.Pop()) {
        ScanShard(scanner, *shard, partial[w]);
      }
    });
  }
  absl::Status status = absl::OkStatus();
  for (const std::filesystem::path& file : source.files) {
    status = ReadShards(file, options.shard_bytes,
                        [&](std::string shard) { queue.Push(std::move(shard)); });
    if (!status.ok()) break;
  }
  queue.Close();
  for (std::thread& t : threads) t.join();
  if (!status.ok()) return status;

  AffectCounts total;
  for (const AffectCounts& p : partial) total.Merge(p);
  return total;
}

AffectCounts ScanText(const Lexicon& lexicon, std::string_view corpus,
                      CountingMode mode) {
  AffectCounts counts;
  if (corpus.empty()) return counts;
  DocumentScanner scanner(lexicon, mode);
  ScanShard(scanner, corpus, counts);
  return counts;
}

OccurrenceSummary SummarizeOccurrence(const AffectCounts& counts) {
  OccurrenceSummary summary;
  summary.occ = counts.occ;
  std::array<double, kNumEmotions> values{};
  for (size_t e = 0; e < kNumEmotions; ++e) {
    summary.total_affective += counts.occ[e];
    values[e] = static_cast<double>(counts.occ[e]);
  }
  // Four values always satisfy the N >= 2 precondition.
  summary.stddev = ComputeSampleStats(values)->stddev;
  return summary;
}

CooccurrenceTable CooccurrencePercentages(const AffectCounts& counts) {
  CooccurrenceTable table;
  for (size_t g = 0; g < kNumGroups; ++g) {
    uint64_t total = 0;
    for (size_t e = 0; e < kNumEmotions; ++e) total += counts.coocc[e][g];
    table.column_totals[g] = total;
    if (total == 0) continue;
    for (size_t e = 0; e < kNumEmotions; ++e) {
      table.pct[g][e] = 100.0 * static_cast<double>(counts.coocc[e][g]) /
                        static_cast<double>(total);
    }
  }
  return table;
}

}  // namespace affect_audit
