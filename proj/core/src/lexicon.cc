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

#include "affect_audit/lexicon.h"
#include "affect_audit/str_util.h"

#include <algorithm>

#include "absl/status/status.h"
#include "affect_audit/checksum.h"
#include "affect_audit/logging.h"
#include "affect_audit/text.h"

namespace affect_audit {

std::string TermLabel::ToString() const {
  if (kind == Kind::kEmotion) return StrCat("emotion:", EmotionName(emotion));
  return StrCat(DomainName(DomainOf(group)), ":", GroupName(group));
}

std::vector<TermLabel> LabelsFromMask(LabelMask mask) {
  std::vector<TermLabel> labels;
  for (Emotion e : kAllEmotions) {
    if (mask & EmotionBit(e)) labels.push_back(TermLabel::ForEmotion(e));
  }
  for (Group g : kAllGroups) {
    if (mask & GroupBit(g)) labels.push_back(TermLabel::ForGroup(g));
  }
  return labels;
}

namespace {

absl::Status ValidateTerm(const std::string& term) {
  if (term.empty()) return absl::InvalidArgumentError("empty term");
  if (NormalizeTerm(term) != term) {
    return absl::InvalidArgumentError(
        StrCat("term '", term, "' is not a single lowercase token"));
  }
  return absl::OkStatus();
}

}  // namespace

bool Lexicon::has_emotion_terms() const {
  return std::any_of(emotion_terms_.begin(), emotion_terms_.end(),
                     [](const TermSet& s) { return !s.empty(); });
}

bool Lexicon::has_target_terms() const {
  return std::any_of(target_terms_.begin(), target_terms_.end(),
                     [](const TermSet& s) { return !s.empty(); });
}

absl::Status Lexicon::BuildIndex(EmotionOverlap overlap) {
  index_.clear();
  for (Emotion e : kAllEmotions) {
    for (const std::string& term : emotion_terms_[Index(e)]) {
      if (absl::Status s = ValidateTerm(term); !s.ok()) return s;
      LabelMask& mask = index_[term];
      if ((mask & kEmotionBits) && overlap == EmotionOverlap::kReject) {
        return absl::InvalidArgumentError(StrCat(
            "term '", term, "' is listed under more than one emotion (",
            LabelsFromMask(mask & kEmotionBits).front().ToString(), " and ",
            TermLabel::ForEmotion(e).ToString(), ")"));
      }
      mask |= EmotionBit(e);
    }
  }
  for (Group g : kAllGroups) {
    for (const std::string& term : target_terms_[Index(g)]) {
      if (absl::Status s = ValidateTerm(term); !s.ok()) return s;
      index_[term] |= GroupBit(g);
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Lexicon> Lexicon::FromSets(
    std::array<TermSet, kNumEmotions> emotion_terms,
    std::array<TermSet, kNumGroups> target_terms, EmotionOverlap overlap) {
  Lexicon lexicon;
  lexicon.emotion_terms_ = std::move(emotion_terms);
  lexicon.target_terms_ = std::move(target_terms);
  if (absl::Status s = lexicon.BuildIndex(overlap); !s.ok()) return s;
  return lexicon;
}

absl::StatusOr<Lexicon> Lexicon::Merge(const Lexicon& a, const Lexicon& b) {
  Lexicon merged;
  for (size_t i = 0; i < kNumEmotions; ++i) {
    merged.emotion_terms_[i] = a.emotion_terms_[i];
    merged.emotion_terms_[i].insert(b.emotion_terms_[i].begin(),
                                    b.emotion_terms_[i].end());
  }
  for (size_t i = 0; i < kNumGroups; ++i) {
    merged.target_terms_[i] = a.target_terms_[i];
    merged.target_terms_[i].insert(b.target_terms_[i].begin(),
                                   b.target_terms_[i].end());
  }
  if (absl::Status s = merged.BuildIndex(); !s.ok()) return s;
  merged.sources_ = a.sources_;
  merged.sources_.insert(merged.sources_.end(), b.sources_.begin(),
                         b.sources_.end());
  return merged;
}

absl::StatusOr<Lexicon> LoadLexiconFromString(std::string_view text,
                                              LexiconKind kind,
                                              std::string_view source_name) {
  Lexicon lexicon;
  Lexicon::TermSet* current = nullptr;
  std::string current_label;
  size_t duplicates = 0;
  size_t sections = 0;
  size_t line_no = 0;

  auto error = [&](std::string_view what) {
    return absl::InvalidArgumentError(
        StrCat(source_name, ":", line_no, ": ", what));
  };

  for (std::string_view raw_line : StrSplit(text, '\n')) {
    ++line_no;
    std::string line = NormalizeApostrophes(StripAsciiWhitespace(raw_line));
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') return error("unterminated section header");
      const std::string label =
          AsciiStrToLower(StripAsciiWhitespace(
              std::string_view(line).substr(1, line.size() - 2)));
      if (kind == LexiconKind::kEmotion) {
        std::optional<Emotion> emotion = ParseEmotion(label);
        if (!emotion) return error(StrCat("unknown emotion label '", label, "'"));
        current = &lexicon.emotion_terms_[Index(*emotion)];
      } else {
        std::vector<std::string_view> parts = StrSplit(label, ':');
        if (parts.size() != 2) {
          return error(StrCat("target section must be <domain>:<group>, got '",
                                    label, "'"));
        }
        std::optional<Domain> domain = ParseDomain(parts[0]);
        if (!domain) return error(StrCat("unknown domain label '", parts[0], "'"));
        std::optional<Group> group = ParseGroup(parts[1]);
        if (!group) return error(StrCat("unknown group label '", parts[1], "'"));
        if (DomainOf(*group) != *domain) {
          return error(StrCat("group '", parts[1], "' does not belong to domain '",
                                    parts[0], "'"));
        }
        current = &lexicon.target_terms_[Index(*group)];
      }
      current_label = label;
      ++sections;
      continue;
    }

    if (current == nullptr) return error("term before any section header");
    for (std::string_view item : StrSplit(line, ',')) {
      const std::string_view stripped = StripAsciiWhitespace(item);
      if (stripped.empty()) return error("empty term");
      if (std::any_of(stripped.begin(), stripped.end(),
                      [](char c) { return IsAsciiSpace(c); })) {
        return error(StrCat("term '", stripped, "' contains whitespace"));
      }
      std::string term = AsciiStrToLower(stripped);
      if (absl::Status s = ValidateTerm(term); !s.ok()) return error(StatusMessage(s));
      if (!current->insert(term).second) {
        ++duplicates;
        LogWarning(StrCat(source_name, ":", line_no, ": duplicate term '", term,
                                "' in [", current_label, "] collapsed"));
      }
    }
  }
  if (sections == 0) return error("malformed lexicon file: no sections");

  if (absl::Status s = lexicon.BuildIndex(); !s.ok()) {
    return absl::InvalidArgumentError(StrCat(source_name, ": ", StatusMessage(s)));
  }
  lexicon.sources_.push_back(LexiconSource{std::string(source_name),
                                           BytesChecksum(text), kind, duplicates});
  return lexicon;
}

absl::StatusOr<Lexicon> LoadLexicon(const std::filesystem::path& path,
                                    LexiconKind kind) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  return LoadLexiconFromString(*text, kind, path.string());
}

std::string SerializeLexicon(const Lexicon& lexicon, LexiconKind kind) {
  std::string out;
  if (kind == LexiconKind::kEmotion) {
    for (Emotion e : kAllEmotions) {
      StrAppend(&out, "[", EmotionName(e), "]\n");
      for (const std::string& term : lexicon.emotion_terms(e)) {
        StrAppend(&out, term, "\n");
      }
    }
  } else {
    for (Group g : kAllGroups) {
      if (lexicon.target_terms(g).empty()) continue;
      StrAppend(&out, "[", DomainName(DomainOf(g)), ":", GroupName(g), "]\n");
      for (const std::string& term : lexicon.target_terms(g)) {
        StrAppend(&out, term, "\n");
      }
    }
  }
  return out;
}

std::vector<TermLabel> ClassifyToken(const Lexicon& lexicon,
                                     std::string_view token) {
  return LabelsFromMask(lexicon.Lookup(token));
}

std::vector<OverlapEntry> LexiconOverlapReport(const Lexicon& lexicon) {
  std::set<std::string> terms;
  for (Emotion e : kAllEmotions) {
    terms.insert(lexicon.emotion_terms(e).begin(), lexicon.emotion_terms(e).end());
  }
  for (Group g : kAllGroups) {
    terms.insert(lexicon.target_terms(g).begin(), lexicon.target_terms(g).end());
  }
  std::vector<OverlapEntry> report;
  for (const std::string& term : terms) {
    std::vector<TermLabel> labels = ClassifyToken(lexicon, term);
    if (labels.size() > 1) report.push_back({term, std::move(labels)});
  }
  return report;
}

}  // namespace affect_audit
