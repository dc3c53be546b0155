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

// affect_audit: corpus scans, lexicon checks, pair ingest and bias reports.
//
// Exit status: 0 success, 1 runtime failure (bad data, failed check),
// 2 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affect_audit/audit.h"
#include "affect_audit/bias_metrics.h"
#include "affect_audit/checksum.h"
#include "affect_audit/corpus_scan.h"
#include "affect_audit/lexicon.h"
#include "affect_audit/logging.h"
#include "affect_audit/pair_corpus.h"
#include "affect_audit/prediction_io.h"
#include "affect_audit/report.h"
#include "affect_audit/str_util.h"
#include "json.hpp"

namespace affect_audit {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

// Lexicon files default to <data>/lexicons. Lookup order: AFFECT_AUDIT_DATA_DIR,
// the source tree this binary was built from, then <prefix>/share/affect_audit.
fs::path DataDir() {
  if (const char* env = std::getenv("AFFECT_AUDIT_DATA_DIR"); env && *env) return env;
  if (fs::exists(fs::path(AFFECT_AUDIT_BUILD_DATA_DIR) / "lexicons")) {
    return AFFECT_AUDIT_BUILD_DATA_DIR;
  }
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) return exe.parent_path().parent_path() / "share" / "affect_audit";
  return AFFECT_AUDIT_BUILD_DATA_DIR;
}

std::vector<std::string> DefaultEmotionLexicons() {
  return {(DataDir() / "lexicons" / "affective_terms.txt").string()};
}

std::vector<std::string> DefaultTargetLexicons() {
  std::vector<std::string> out;
  for (const char* name : {"gender_terms.txt", "race_terms.txt", "religion_terms.txt"}) {
    out.push_back((DataDir() / "lexicons" / name).string());
  }
  return out;
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << StatusMessage(status) << "\n";
  return kExitRuntime;
}

std::string Absolute(const std::string& p) { return fs::absolute(p).lexically_normal().string(); }

// Lexicon paths that do not exist are usage errors; unreadable or malformed
// files are runtime errors.
absl::StatusOr<Lexicon> LoadLexicons(const std::vector<std::string>& emotion_files,
                                     const std::vector<std::string>& target_files) {
  for (const auto* files : {&emotion_files, &target_files}) {
    for (const std::string& f : *files) {
      if (!fs::exists(f)) throw UsageError{StrCat("lexicon not found: ", f)};
    }
  }
  Lexicon merged;
  bool first = true;
  auto add = [&](const std::string& path, LexiconKind kind) -> absl::Status {
    absl::StatusOr<Lexicon> lex = LoadLexicon(path, kind);
    if (!lex.ok()) return lex.status();
    if (first) {
      merged = *std::move(lex);
      first = false;
      return absl::OkStatus();
    }
    absl::StatusOr<Lexicon> m = Lexicon::Merge(merged, *lex);
    if (!m.ok()) return m.status();
    merged = *std::move(m);
    return absl::OkStatus();
  };
  for (const std::string& f : emotion_files) {
    if (absl::Status s = add(f, LexiconKind::kEmotion); !s.ok()) return s;
  }
  for (const std::string& f : target_files) {
    if (absl::Status s = add(f, LexiconKind::kTarget); !s.ok()) return s;
  }
  return merged;
}

Json ChecksumList(const std::vector<std::string>& paths) {
  Json out = Json::array();
  for (const std::string& p : paths) {
    absl::StatusOr<std::string> sum = FileChecksum(p);
    out.push_back({{"path", Absolute(p)}, {"checksum", sum.ok() ? *sum : ""}});
  }
  return out;
}

// run.json: enough to rerun the command with `replay`.
absl::Status WriteRunManifest(const fs::path& out_dir, const std::string& command,
                              const std::vector<std::string>& args, Json inputs,
                              Json extra = Json::object()) {
  Json run;
  run["tool"] = "affect_audit";
  run["version"] = AFFECT_AUDIT_VERSION;
  run["command"] = command;
  run["args"] = args;
  run["inputs"] = std::move(inputs);
  for (auto& [k, v] : extra.items()) run[k] = v;
  return WriteStringToFile(out_dir / "run.json", run.dump(2) + "\n");
}

absl::Status WriteOutput(const fs::path& out_dir, const std::string& name,
                         const std::string& content) {
  return WriteStringToFile(out_dir / name, content);
}

absl::Status EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return absl::InternalError(StrCat("cannot create ", dir.string(), ": ", ec.message()));
  return absl::OkStatus();
}

// ---- scan ----

struct ScanArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> lexicons;
  std::vector<std::string> targets;
  int workers = 1;
  bool token_level = false;
  std::string corpus_name = "corpus";
  std::string out;
  size_t shard_bytes = 1 << 20;
};

std::vector<std::string> ScanReplayArgs(const ScanArgs& a) {
  std::vector<std::string> args = {"scan"};
  for (const auto& i : a.inputs) args.insert(args.end(), {"--input", Absolute(i)});
  for (const auto& l : a.lexicons) args.insert(args.end(), {"--lexicon", Absolute(l)});
  for (const auto& t : a.targets) args.insert(args.end(), {"--targets", Absolute(t)});
  args.insert(args.end(), {"--workers", StrCat(a.workers), "--name", a.corpus_name});
  if (a.token_level) args.push_back("--token-level");
  return args;
}

int RunScan(ScanArgs a) {
  if (a.lexicons.empty()) a.lexicons = DefaultEmotionLexicons();
  if (a.targets.empty()) a.targets = DefaultTargetLexicons();
  absl::StatusOr<Lexicon> lexicon = LoadLexicons(a.lexicons, a.targets);
  if (!lexicon.ok()) return Fail(lexicon.status());

  std::vector<fs::path> inputs(a.inputs.begin(), a.inputs.end());
  absl::StatusOr<CorpusSource> source = ResolveCorpusSource(inputs);
  if (!source.ok()) return Fail(source.status());

  ScanOptions options;
  options.workers = a.workers;
  options.mode = a.token_level ? CountingMode::kToken : CountingMode::kSentence;
  options.shard_bytes = a.shard_bytes;
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<AffectCounts> counts = ScanCorpus(*lexicon, *source, options);
  if (!counts.ok()) return Fail(counts.status());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::vector<NamedOccurrence> occ = {{a.corpus_name, SummarizeOccurrence(*counts)}};
  const std::vector<NamedCooccurrence> coocc = {
      {a.corpus_name, CooccurrencePercentages(*counts)}};
  const std::string occ_md = RenderOccurrenceTable(occ, TableFormat::kMarkdown);
  std::cout << occ_md << "\n" << RenderCooccurrenceTable(coocc, TableFormat::kMarkdown);
  std::cerr << StrFormat("scanned %d files, %llu sentences, %.1f MB in %.2f s\n",
                         static_cast<int>(source->files.size()),
                         static_cast<unsigned long long>(counts->sentences_scanned),
                         counts->bytes_scanned / 1e6, secs);

  if (a.out.empty()) return kExitOk;
  const fs::path out = a.out;
  if (absl::Status s = EnsureDir(out); !s.ok()) return Fail(s);
  const std::vector<std::pair<std::string, std::string>> files = {
      {"counts.json", AffectCountsToJson(*counts, options.mode)},
      {"occurrence.md", occ_md},
      {"occurrence.csv", RenderOccurrenceTable(occ, TableFormat::kCsv)},
      {"cooccurrence.md", RenderCooccurrenceTable(coocc, TableFormat::kMarkdown)},
      {"cooccurrence.csv", RenderCooccurrenceTable(coocc, TableFormat::kCsv)},
  };
  for (const auto& [name, content] : files) {
    if (absl::Status s = WriteOutput(out, name, content); !s.ok()) return Fail(s);
  }
  std::vector<std::string> input_files;
  for (const fs::path& p : source->files) input_files.push_back(p.string());
  Json manifest_inputs = {{"corpus", ChecksumList(input_files)},
                          {"lexicons", ChecksumList(a.lexicons)},
                          {"targets", ChecksumList(a.targets)}};
  absl::Status s = WriteRunManifest(out, "scan", ScanReplayArgs(a), std::move(manifest_inputs));
  return s.ok() ? kExitOk : Fail(s);
}

// ---- eval ----

struct EvalArgs {
  std::vector<std::string> pairs;
  std::string mapping;
  std::string preds;
  std::string score_mode = "emotion-probability";
  std::string bucket_mode = "auto";
  double tau = 0.80;
  double alpha = 0.05;
  std::string out;
  bool scatter = false;
};

std::vector<std::string> EvalReplayArgs(const EvalArgs& a) {
  std::vector<std::string> args = {"eval"};
  for (const auto& p : a.pairs) args.insert(args.end(), {"--pairs", Absolute(p)});
  if (!a.mapping.empty()) args.insert(args.end(), {"--mapping", Absolute(a.mapping)});
  args.insert(args.end(), {"--preds", Absolute(a.preds), "--score-mode", a.score_mode,
                           "--bucket-mode", a.bucket_mode, "--tau", StrFormat("%.17g", a.tau),
                           "--alpha", StrFormat("%.17g", a.alpha)});
  if (a.scatter) args.push_back("--scatter");
  return args;
}

absl::Status WriteScatter(const fs::path& dir, const BiasReport& report,
                          const std::vector<PairRecord>& records,
                          const std::vector<Prediction>& preds) {
  if (absl::Status s = EnsureDir(dir); !s.ok()) return s;
  for (const ReportColumn& col : report.columns) {
    std::vector<PairRecord> subset;
    for (const PairRecord& r : records) {
      if (r.corpus_tag == col.corpus) subset.push_back(r);
    }
    absl::StatusOr<GroupPairing> pairing =
        BuildPairing(subset, col.domain, col.group_a, col.group_b);
    if (!pairing.ok()) return pairing.status();
    absl::StatusOr<ScoredPairing> scored = JoinPredictions(*pairing, preds);
    if (!scored.ok()) return scored.status();
    for (Emotion e : kAllEmotions) {
      absl::StatusOr<EmotionBucket> bucket =
          MakeBucket(*scored, e, col.score_mode, col.bucket_mode);
      if (!bucket.ok()) return bucket.status();
      if (bucket->empty()) continue;
      const std::string stem = StrCat(ReportFileStem(report.model_tag, col), "_", EmotionName(e));
      absl::StatusOr<std::string> csv = ExportIntensityScatter(*bucket);
      absl::StatusOr<std::string> svg =
          RenderIntensitySvg(*bucket, GroupName(col.group_a), GroupName(col.group_b));
      if (!csv.ok()) return csv.status();
      if (!svg.ok()) return svg.status();
      if (absl::Status s = WriteOutput(dir, stem + ".csv", *csv); !s.ok()) return s;
      if (absl::Status s = WriteOutput(dir, stem + ".svg", *svg); !s.ok()) return s;
    }
  }
  return absl::OkStatus();
}

int RunEval(const EvalArgs& a) {
  AuditOptions options;
  std::optional<ScoreMode> sm = ParseScoreMode(a.score_mode);
  if (!sm) throw UsageError{StrCat("unknown --score-mode: ", a.score_mode)};
  options.score_mode = *sm;
  if (a.bucket_mode != "auto") {
    std::optional<BucketMode> bm = ParseBucketMode(a.bucket_mode);
    if (!bm) throw UsageError{StrCat("unknown --bucket-mode: ", a.bucket_mode)};
    options.bucket_mode = *bm;
  }
  options.thresholds = {a.tau, a.alpha};

  ColumnMapping mapping = ColumnMapping::Normalized();
  if (!a.mapping.empty()) {
    absl::StatusOr<ColumnMapping> m = LoadColumnMapping(a.mapping);
    if (!m.ok()) return Fail(m.status());
    mapping = *m;
  }
  std::vector<PairRecord> records;
  for (const std::string& p : a.pairs) {
    absl::StatusOr<IngestResult> r = IngestCorpus(p, fs::path(p).stem().string(), mapping);
    if (!r.ok()) return Fail(r.status());
    if (r->dropped_total() > 0) {
      std::cerr << p << ": dropped " << r->dropped_total() << " of " << r->rows_in << " rows\n";
    }
    records.insert(records.end(), r->records.begin(), r->records.end());
  }
  absl::StatusOr<std::vector<Prediction>> preds = ReadPredictions(a.preds);
  if (!preds.ok()) return Fail(preds.status());

  absl::StatusOr<BiasReport> report = RunAudit(records, *preds, options);
  if (!report.ok()) return Fail(report.status());
  if (report->columns.empty()) {
    return Fail(absl::FailedPreconditionError("no pairing with both groups present"));
  }
  report->metadata["version"] = AFFECT_AUDIT_VERSION;
  if (absl::StatusOr<std::string> sum = FileChecksum(a.preds); sum.ok()) {
    report->metadata["predictions_checksum"] = *sum;
  }

  size_t dp_flags = 0, p_flags = 0;
  for (const ReportColumn& col : report->columns) {
    for (const MetricCell& cell : col.cells) {
      dp_flags += cell.dp_below_threshold;
      p_flags += cell.p_significant;
    }
  }
  const std::string md = RenderMetricTable(*report, TableFormat::kMarkdown);
  std::cout << md;
  std::cout << StrFormat("flagged: %d DP cells below tau=%g, %d p-values below alpha=%g\n",
                         static_cast<int>(dp_flags), a.tau, static_cast<int>(p_flags), a.alpha);

  if (a.out.empty()) return kExitOk;
  const fs::path out = a.out;
  if (absl::Status s = EnsureDir(out); !s.ok()) return Fail(s);
  for (const ReportColumn& col : report->columns) {
    BiasReport single = *report;
    single.columns = {col};
    const std::string stem = ReportFileStem(report->model_tag, col);
    for (const auto& [ext, fmt] : {std::pair{".md", TableFormat::kMarkdown},
                                   std::pair{".csv", TableFormat::kCsv}}) {
      if (absl::Status s = WriteOutput(out, stem + ext, RenderMetricTable(single, fmt)); !s.ok()) {
        return Fail(s);
      }
    }
  }
  // Sanitized model tag; the replacement is byte-for-byte so the length holds.
  const std::string combined = ReportFileStem(report->model_tag, ReportColumn{}).substr(
      0, report->model_tag.size());
  if (absl::Status s = WriteOutput(out, combined + "_report.md", md); !s.ok()) return Fail(s);
  if (absl::Status s = WriteOutput(out, combined + "_report.csv",
                                   RenderMetricTable(*report, TableFormat::kCsv));
      !s.ok()) {
    return Fail(s);
  }
  if (a.scatter) {
    if (absl::Status s = WriteScatter(out / "scatter", *report, records, *preds); !s.ok()) {
      return Fail(s);
    }
  }
  Json inputs = {{"pairs", ChecksumList(a.pairs)}, {"predictions", ChecksumList({a.preds})}};
  if (!a.mapping.empty()) inputs["mapping"] = ChecksumList({a.mapping});
  Json extra = {{"metadata", report->metadata},
                {"flagged", {{"dp", dp_flags}, {"p_value", p_flags}}}};
  absl::Status s = WriteRunManifest(out, "eval", EvalReplayArgs(a), std::move(inputs), extra);
  return s.ok() ? kExitOk : Fail(s);
}

// ---- lexicon validate ----

struct LexiconArgs {
  std::vector<std::string> lexicons;
  std::vector<std::string> targets;
  std::string expect;
};

int RunLexiconValidate(LexiconArgs a) {
  if (a.lexicons.empty() && a.targets.empty()) {
    a.lexicons = DefaultEmotionLexicons();
    a.targets = DefaultTargetLexicons();
  }
  std::map<std::string, size_t> expected;
  if (!a.expect.empty()) {
    for (std::string_view item : StrSplit(a.expect, ',')) {
      item = StripAsciiWhitespace(item);
      if (item.empty()) continue;
      const size_t eq = item.find('=');
      size_t n = 0;
      if (eq == std::string_view::npos || !SimpleAtoi(item.substr(eq + 1), &n)) {
        throw UsageError{StrCat("bad --expect entry '", item, "' (want label=count)")};
      }
      std::string key = AsciiStrToLower(StripAsciiWhitespace(item.substr(0, eq)));
      if (std::optional<Group> g = ParseGroup(key)) key = std::string(GroupName(*g));
      expected[key] = n;
    }
  }
  absl::StatusOr<Lexicon> lexicon = LoadLexicons(a.lexicons, a.targets);
  if (!lexicon.ok()) return Fail(lexicon.status());

  std::map<std::string, size_t> actual;
  for (Emotion e : kAllEmotions) {
    const size_t n = lexicon->emotion_terms(e).size();
    if (n > 0) actual[std::string(EmotionName(e))] = n;
  }
  for (Group g : kAllGroups) {
    const size_t n = lexicon->target_terms(g).size();
    if (n > 0) actual[std::string(GroupName(g))] = n;
  }
  for (const LexiconSource& src : lexicon->sources()) {
    std::cout << src.path << "  " << src.checksum;
    if (src.duplicates_collapsed > 0) {
      std::cout << "  (" << src.duplicates_collapsed << " duplicates collapsed)";
    }
    std::cout << "\n";
  }
  for (Emotion e : kAllEmotions) {
    std::cout << StrFormat("%-8s %5d\n", EmotionName(e),
                           static_cast<int>(lexicon->emotion_terms(e).size()));
  }
  for (Group g : kAllGroups) {
    std::cout << StrFormat("%-8s %5d\n", GroupName(g),
                           static_cast<int>(lexicon->target_terms(g).size()));
  }
  const std::vector<OverlapEntry> overlap = LexiconOverlapReport(*lexicon);
  for (const OverlapEntry& o : overlap) {
    std::vector<std::string> labels;
    for (const TermLabel& l : o.labels) labels.push_back(l.ToString());
    std::cout << "overlap: " << o.term << " -> " << StrJoin(labels, ", ") << "\n";
  }

  int status = kExitOk;
  for (const auto& [key, want] : expected) {
    auto it = actual.find(key);
    const size_t got = it == actual.end() ? 0 : it->second;
    if (got != want) {
      std::cerr << "mismatch: " << key << " has " << got << " terms, expected " << want << "\n";
      status = kExitRuntime;
    }
  }
  return status;
}

// ---- pairs ----

struct IngestArgs {
  std::string input;
  std::string mapping;
  std::string corpus;
  std::string out;
};

int RunPairsIngest(const IngestArgs& a) {
  ColumnMapping mapping = ColumnMapping::Normalized();
  if (!a.mapping.empty()) {
    absl::StatusOr<ColumnMapping> m = LoadColumnMapping(a.mapping);
    if (!m.ok()) return Fail(m.status());
    mapping = *m;
  }
  const std::string tag = a.corpus.empty() ? fs::path(a.input).stem().string() : a.corpus;
  absl::StatusOr<IngestResult> r = IngestCorpus(a.input, tag, mapping);
  if (!r.ok()) return Fail(r.status());
  std::cerr << StrFormat("%s: %d rows in, %d records, %d dropped\n", a.input,
                         static_cast<int>(r->rows_in), static_cast<int>(r->records.size()),
                         static_cast<int>(r->dropped_total()));
  for (const auto& [reason, n] : r->dropped) std::cerr << "  " << reason << ": " << n << "\n";
  const std::string csv = WriteNormalizedCsv(r->records);
  if (a.out.empty() || a.out == "-") {
    std::cout << csv;
    return kExitOk;
  }
  absl::Status s = WriteStringToFile(a.out, csv);
  return s.ok() ? kExitOk : Fail(s);
}

struct LintArgs {
  std::vector<std::string> pairs;
  std::vector<std::string> targets;
  bool strict = false;
};

int RunPairsLint(LintArgs a) {
  if (a.targets.empty()) a.targets = DefaultTargetLexicons();
  absl::StatusOr<Lexicon> lexicon = LoadLexicons({}, a.targets);
  if (!lexicon.ok()) return Fail(lexicon.status());
  size_t non_minimal = 0;
  for (const std::string& p : a.pairs) {
    absl::StatusOr<IngestResult> r =
        IngestCorpus(p, fs::path(p).stem().string(), ColumnMapping::Normalized());
    if (!r.ok()) return Fail(r.status());
    std::array<bool, kNumGroups> present{};
    for (const PairRecord& rec : r->records) present[Index(rec.group)] = true;
    for (const GroupPair& gp : kStandardPairings) {
      if (!present[Index(gp.a)] || !present[Index(gp.b)]) continue;
      absl::StatusOr<GroupPairing> pairing = BuildPairing(r->records, DomainOf(gp.a), gp.a, gp.b);
      if (!pairing.ok()) return Fail(pairing.status());
      std::map<MinimalPairVerdict::Kind, size_t> tally;
      for (const auto& [ra, rb] : pairing->pairs) {
        MinimalPairVerdict v = VerifyMinimalPair(ra.text, rb.text, *lexicon);
        ++tally[v.kind];
        if (v.kind != MinimalPairVerdict::Kind::kMinimal) {
          ++non_minimal;
          std::cout << StrFormat("%s %s: %s\n  %s\n  %s\n", ra.pair_id, VerdictName(v.kind),
                                 StrCat(GroupName(gp.a), "x", GroupName(gp.b)), ra.text, rb.text);
        }
      }
      std::cerr << StrFormat("%s %sx%s: %d pairs, %d unmatched (%d/%d)", p, GroupName(gp.a),
                             GroupName(gp.b), static_cast<int>(pairing->size()),
                             static_cast<int>(pairing->excluded_a + pairing->excluded_b),
                             static_cast<int>(pairing->excluded_a),
                             static_cast<int>(pairing->excluded_b));
      for (const auto& [kind, n] : tally) {
        std::cerr << StrFormat(", %s %d", VerdictName(kind), static_cast<int>(n));
      }
      std::cerr << "\n";
    }
  }
  return a.strict && non_minimal > 0 ? kExitRuntime : kExitOk;
}

// ---- replay ----

int RunMain(std::vector<std::string> args);

int RunReplay(const std::string& manifest_path, const std::string& out, bool force) {
  absl::StatusOr<std::string> text = ReadFileToString(manifest_path);
  if (!text.ok()) return Fail(text.status());
  Json run = Json::parse(*text, nullptr, false);
  if (run.is_discarded() || !run.contains("args") || !run["args"].is_array()) {
    return Fail(absl::InvalidArgumentError(StrCat(manifest_path, ": not a run manifest")));
  }
  // Inputs must be byte-identical to the recorded run.
  bool drift = false;
  std::function<void(const Json&)> check = [&](const Json& node) {
    if (node.is_array()) {
      for (const Json& e : node) check(e);
    } else if (node.is_object() && node.contains("checksum")) {
      absl::StatusOr<std::string> sum = FileChecksum(node["path"].get<std::string>());
      const std::string now = sum.ok() ? *sum : "missing";
      if (now != node["checksum"].get<std::string>()) {
        std::cerr << "input changed: " << node["path"].get<std::string>() << " ("
                  << node["checksum"].get<std::string>() << " -> " << now << ")\n";
        drift = true;
      }
    } else if (node.is_object()) {
      for (const auto& [k, v] : node.items()) check(v);
    }
  };
  check(run["inputs"]);
  if (drift && !force) {
    return Fail(absl::FailedPreconditionError("inputs differ from the recorded run"));
  }
  std::vector<std::string> args = run["args"].get<std::vector<std::string>>();
  if (!out.empty()) args.insert(args.end(), {"--out", out});
  return RunMain(args);
}

// ---- dispatch ----

int RunMain(std::vector<std::string> argv_in) {
  CLI::App app{"Affective-bias audit toolkit", "affect_audit"};
  app.set_version_flag("--version", std::string(AFFECT_AUDIT_VERSION));
  app.require_subcommand(1);
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "More logging (repeatable)");

  ScanArgs scan;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Count emotion and target-term co-occurrence");
  scan_cmd->add_option("--input", scan.inputs, "Corpus files or directories (.txt, .gz)")
      ->required()
      ->check(CLI::ExistingPath);
  scan_cmd->add_option("--lexicon", scan.lexicons, "Emotion lexicon files");
  scan_cmd->add_option("--targets", scan.targets, "Target-term lexicon files");
  scan_cmd->add_option("--workers", scan.workers, "Worker threads")->check(CLI::Range(1, 1024));
  scan_cmd->add_flag("--token-level", scan.token_level, "Count every emotion token in occ");
  scan_cmd->add_option("--name", scan.corpus_name, "Corpus label in tables");
  scan_cmd->add_option("--shard-bytes", scan.shard_bytes, "Shard size per work item")
      ->check(CLI::Range(size_t{1}, size_t{1} << 34));
  scan_cmd->add_option("--out", scan.out, "Output directory");

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Compute bias metrics from predictions");
  eval_cmd->add_option("--pairs", eval.pairs, "Pair corpus CSV files")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--mapping", eval.mapping, "Column mapping for --pairs")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--preds", eval.preds, "Prediction JSONL")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--score-mode", eval.score_mode, "emotion-probability | max-probability");
  eval_cmd->add_option("--bucket-mode", eval.bucket_mode, "auto | gold | predicted-union");
  eval_cmd->add_option("--tau", eval.tau, "DP threshold")->check(CLI::Range(0.0, 1.0));
  eval_cmd->add_option("--alpha", eval.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  eval_cmd->add_flag("--scatter", eval.scatter, "Also write per-bucket scatter CSV/SVG");
  eval_cmd->add_option("--out", eval.out, "Output directory");

  LexiconArgs lex;
  CLI::App* lex_cmd = app.add_subcommand("lexicon", "Lexicon utilities");
  lex_cmd->require_subcommand(1);
  CLI::App* validate_cmd = lex_cmd->add_subcommand("validate", "Load, count and cross-check");
  validate_cmd->add_option("--lexicon", lex.lexicons, "Emotion lexicon files");
  validate_cmd->add_option("--targets", lex.targets, "Target-term lexicon files");
  validate_cmd->add_option("--expect", lex.expect, "Expected counts, e.g. anger=162,M=199");

  CLI::App* pairs_cmd = app.add_subcommand("pairs", "Pair corpus utilities");
  pairs_cmd->require_subcommand(1);
  IngestArgs ingest;
  CLI::App* ingest_cmd = pairs_cmd->add_subcommand("ingest", "Normalize a pair corpus CSV");
  ingest_cmd->add_option("--input", ingest.input, "Source CSV")->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("--mapping", ingest.mapping, "Column mapping file")
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--corpus", ingest.corpus, "corpus_tag for the records");
  ingest_cmd->add_option("--out", ingest.out, "Normalized CSV path (default stdout)");
  LintArgs lint;
  CLI::App* lint_cmd = pairs_cmd->add_subcommand("lint", "Report pairs that are not minimal");
  lint_cmd->add_option("--pairs", lint.pairs, "Normalized pair CSV files")
      ->required()
      ->check(CLI::ExistingFile);
  lint_cmd->add_option("--targets", lint.targets, "Target-term lexicon files");
  lint_cmd->add_flag("--strict", lint.strict, "Exit 1 if any pair is not minimal");

  std::string manifest, replay_out;
  bool force = false;
  CLI::App* replay_cmd = app.add_subcommand("replay", "Rerun a recorded run.json");
  replay_cmd->add_option("manifest", manifest, "run.json")->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("--out", replay_out, "Output directory");
  replay_cmd->add_flag("--force", force, "Run even if inputs changed");

  std::vector<std::string> reversed(argv_in.rbegin(), argv_in.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (verbosity >= 2) {
    SetLogLevel(LogLevel::kDebug);
  } else if (verbosity == 1) {
    SetLogLevel(LogLevel::kInfo);
  }

  try {
    if (*scan_cmd) return RunScan(scan);
    if (*eval_cmd) return RunEval(eval);
    if (*validate_cmd) return RunLexiconValidate(lex);
    if (*ingest_cmd) return RunPairsIngest(ingest);
    if (*lint_cmd) return RunPairsLint(lint);
    if (*replay_cmd) return RunReplay(manifest, replay_out, force);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace affect_audit

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return affect_audit::RunMain(std::move(args));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
