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

#ifndef AFFECT_AUDIT_LEXICON_H_
#define AFFECT_AUDIT_LEXICON_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "affect_audit/str_util.h"
#include "absl/status/statusor.h"
#include "affect_audit/labels.h"

namespace affect_audit {

enum class LexiconKind { kEmotion, kTarget };

// Membership of one token: bits 0-3 are emotions, bits 4-11 are groups.
using LabelMask = uint16_t;

constexpr LabelMask EmotionBit(Emotion e) {
  return static_cast<LabelMask>(1u << Index(e));
}
constexpr LabelMask GroupBit(Group g) {
  return static_cast<LabelMask>(1u << (kNumEmotions + Index(g)));
}
inline constexpr LabelMask kEmotionBits = 0x000F;
inline constexpr LabelMask kGroupBits = 0x0FF0;

// One label a term can carry.
struct TermLabel {
  enum class Kind { kEmotion, kTarget };
  Kind kind;
  Emotion emotion = Emotion::kAnger;  // valid when kind == kEmotion
  Group group = Group::kMale;         // valid when kind == kTarget

  static TermLabel ForEmotion(Emotion e) { return {Kind::kEmotion, e, {}}; }
  static TermLabel ForGroup(Group g) { return {Kind::kTarget, {}, g}; }

  // "emotion:joy" or "gender:F".
  std::string ToString() const;

  friend bool operator==(const TermLabel&, const TermLabel&) = default;
};

struct LexiconSource {
  std::string path;
  std::string checksum;
  LexiconKind kind;
  size_t duplicates_collapsed = 0;
};

struct OverlapEntry {
  std::string term;
  std::vector<TermLabel> labels;  // two or more, in label order
};

// Emotion terms (E_terms) and target terms (T_terms). Immutable once built;
// safe to share across scanner threads.
class Lexicon {
 public:
  using TermSet = std::set<std::string>;

  Lexicon() = default;

  enum class EmotionOverlap { kReject, kAllow };

  // Builds a lexicon from already-normalized term sets. Fails if a term is
  // invalid or, unless `overlap` is kAllow, if an emotion term appears under
  // two emotions. kAllow exists for auditing hand-built lexicons; every
  // loader path rejects.
  static absl::StatusOr<Lexicon> FromSets(
      std::array<TermSet, kNumEmotions> emotion_terms,
      std::array<TermSet, kNumGroups> target_terms,
      EmotionOverlap overlap = EmotionOverlap::kReject);

  // Union of two lexicons (e.g. the affective file plus target files).
  // Enforces emotion-set disjointness on the result.
  static absl::StatusOr<Lexicon> Merge(const Lexicon& a, const Lexicon& b);

  const TermSet& emotion_terms(Emotion e) const {
    return emotion_terms_[Index(e)];
  }
  const TermSet& target_terms(Group g) const { return target_terms_[Index(g)]; }
  const std::vector<LexiconSource>& sources() const { return sources_; }

  bool has_emotion_terms() const;
  bool has_target_terms() const;

  // Membership mask of a case-folded token; 0 for non-terms.
  LabelMask Lookup(std::string_view token) const {
    auto it = index_.find(token);
    return it == index_.end() ? LabelMask{0} : it->second;
  }

  size_t num_indexed_terms() const { return index_.size(); }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.emotion_terms_ == b.emotion_terms_ &&
           a.target_terms_ == b.target_terms_;
  }

 private:
  friend absl::StatusOr<Lexicon> LoadLexiconFromString(std::string_view,
                                                       LexiconKind,
                                                       std::string_view);
  absl::Status BuildIndex(EmotionOverlap overlap = EmotionOverlap::kReject);

  std::array<TermSet, kNumEmotions> emotion_terms_;
  std::array<TermSet, kNumGroups> target_terms_;
  StringMap<LabelMask> index_;
  std::vector<LexiconSource> sources_;
};

// Loads a sectioned lexicon file:
//
//   # comment
//   [joy]            (emotion lexicon: anger, fear, joy, sadness)
//   happy
//   [gender:F]       (target lexicon: <domain>:<group>)
//   wife
//
// Terms may also be comma separated on one line. Terms are case-folded and
// typographic apostrophes are normalized. Duplicates within one section are
// collapsed with a warning.
absl::StatusOr<Lexicon> LoadLexicon(const std::filesystem::path& path,
                                    LexiconKind kind);
absl::StatusOr<Lexicon> LoadLexiconFromString(std::string_view text,
                                              LexiconKind kind,
                                              std::string_view source_name);

// Writes the given kind of sets in the file format above, sorted.
std::string SerializeLexicon(const Lexicon& lexicon, LexiconKind kind);

// Every emotion and (domain, group) whose term set contains `token`, in
// label order. `token` must already be case-folded.
std::vector<TermLabel> ClassifyToken(const Lexicon& lexicon,
                                     std::string_view token);

// Terms appearing in more than one set, sorted by term.
std::vector<OverlapEntry> LexiconOverlapReport(const Lexicon& lexicon);

std::vector<TermLabel> LabelsFromMask(LabelMask mask);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_LEXICON_H_
