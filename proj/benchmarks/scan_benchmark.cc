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

#include <random>
#include <string>
#include <vector>

#include "affect_audit/bias_metrics.h"
#include "affect_audit/corpus_scan.h"
#include "affect_audit/lexicon.h"
#include "affect_audit/stat_tests.h"
#include "affect_audit/text.h"
#include "benchmark/benchmark.h"

namespace affect_audit {
namespace {

const Lexicon& ShippedLexicon() {
  static const Lexicon* lexicon = [] {
    const std::string dir = std::string(AFFECT_AUDIT_BENCH_DATA_DIR) + "/lexicons/";
    Lexicon merged = *LoadLexicon(dir + "affective_terms.txt", LexiconKind::kEmotion);
    for (const char* f : {"gender_terms.txt", "race_terms.txt", "religion_terms.txt"}) {
      merged = *Lexicon::Merge(merged, *LoadLexicon(dir + f, LexiconKind::kTarget));
    }
    return new Lexicon(std::move(merged));
  }();
  return *lexicon;
}

std::string SyntheticText(size_t bytes) {
  const Lexicon& lex = ShippedLexicon();
  std::vector<std::string> terms;
  for (Emotion e : kAllEmotions) {
    terms.insert(terms.end(), lex.emotion_terms(e).begin(), lex.emotion_terms(e).end());
  }
  for (Group g : kAllGroups) {
    terms.insert(terms.end(), lex.target_terms(g).begin(), lex.target_terms(g).end());
  }
  const char* filler[] = {"the", "of", "and", "a", "to", "in", "was", "river", "album", "county"};
  std::mt19937_64 rng(3);
  std::string out;
  while (out.size() < bytes) {
    for (int w = 0; w < 12; ++w) {
      out += rng() % 6 == 0 ? terms[rng() % terms.size()] : filler[rng() % 10];
      out += ' ';
    }
    out.back() = '.';
    out += rng() % 4 == 0 ? '\n' : ' ';
  }
  return out;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text = SyntheticText(1 << 20);
  TokenCursor cursor;
  size_t tokens = 0;
  for (auto _ : state) {
    ForEachSentence(text, [&](std::string_view sentence) {
      cursor.ForEach(sentence, [&](std::string_view) { ++tokens; });
    });
  }
  benchmark::DoNotOptimize(tokens);
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize);

void BM_ScanText(benchmark::State& state) {
  const std::string text = SyntheticText(static_cast<size_t>(state.range(0)));
  const Lexicon& lex = ShippedLexicon();
  for (auto _ : state) {
    AffectCounts counts = ScanText(lex, text, CountingMode::kSentence);
    benchmark::DoNotOptimize(counts);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ScanText)->Arg(1 << 16)->Arg(1 << 22);

void BM_PairedPValue(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> a(static_cast<size_t>(state.range(0))), b(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = u(rng);
    b[i] = u(rng);
  }
  const EmotionBucket bucket = BucketFromScores(Emotion::kJoy, a, b);
  for (auto _ : state) benchmark::DoNotOptimize(PairedPValue(bucket));
}
BENCHMARK(BM_PairedPValue)->Arg(100)->Arg(10000);

}  // namespace
}  // namespace affect_audit

BENCHMARK_MAIN();
