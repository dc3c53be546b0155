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

#ifndef AFFECT_AUDIT_LABELS_H_
#define AFFECT_AUDIT_LABELS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace affect_audit {

// The four basic emotions. The enumerator order is the fixed total order
// used for argmax tie-breaking and for every table layout.
enum class Emotion : uint8_t { kAnger = 0, kFear = 1, kJoy = 2, kSadness = 3 };

enum class Domain : uint8_t { kGender = 0, kRace = 1, kReligion = 2 };

// Social groups. Each group belongs to exactly one domain; the enumerator
// order matches the column order of the co-occurrence tables.
enum class Group : uint8_t {
  kMale = 0,
  kFemale = 1,
  kNonBinary = 2,
  kEuropeanAmerican = 3,
  kAfricanAmerican = 4,
  kChristian = 5,
  kMuslim = 6,
  kJewish = 7,
};

inline constexpr size_t kNumEmotions = 4;
inline constexpr size_t kNumDomains = 3;
inline constexpr size_t kNumGroups = 8;

inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::kAnger, Emotion::kFear, Emotion::kJoy, Emotion::kSadness};

inline constexpr std::array<Domain, kNumDomains> kAllDomains = {
    Domain::kGender, Domain::kRace, Domain::kReligion};

inline constexpr std::array<Group, kNumGroups> kAllGroups = {
    Group::kMale,      Group::kFemale,    Group::kNonBinary,
    Group::kEuropeanAmerican, Group::kAfricanAmerican,
    Group::kChristian, Group::kMuslim,    Group::kJewish};

constexpr size_t Index(Emotion e) { return static_cast<size_t>(e); }
constexpr size_t Index(Domain d) { return static_cast<size_t>(d); }
constexpr size_t Index(Group g) { return static_cast<size_t>(g); }

constexpr Domain DomainOf(Group g) {
  switch (g) {
    case Group::kMale:
    case Group::kFemale:
    case Group::kNonBinary:
      return Domain::kGender;
    case Group::kEuropeanAmerican:
    case Group::kAfricanAmerican:
      return Domain::kRace;
    case Group::kChristian:
    case Group::kMuslim:
    case Group::kJewish:
      return Domain::kReligion;
  }
  return Domain::kGender;
}

// Lowercase names: "anger", "gender", ...
std::string_view EmotionName(Emotion e);
std::string_view DomainName(Domain d);
// Short identifiers: "M", "F", "Nb", "EA", "AA", "Ch", "Mu", "Jw".
std::string_view GroupName(Group g);
// Capitalized emotion name for table headings.
std::string_view EmotionTitle(Emotion e);

// Case-insensitive parsers. ParseGroup accepts the short identifiers and
// the common long forms ("male", "african american", "jew", ...).
std::optional<Emotion> ParseEmotion(std::string_view s);
std::optional<Domain> ParseDomain(std::string_view s);
std::optional<Group> ParseGroup(std::string_view s);

// A group-vs-group comparison within one domain, e.g. M x F.
struct GroupPair {
  Group a;
  Group b;

  friend bool operator==(const GroupPair&, const GroupPair&) = default;
};

// The pairings evaluated by default, in report column order:
// MxF, MxNb, FxNb, EAxAA, ChxMu, ChxJw, MuxJw.
inline constexpr std::array<GroupPair, 7> kStandardPairings = {{
    {Group::kMale, Group::kFemale},
    {Group::kMale, Group::kNonBinary},
    {Group::kFemale, Group::kNonBinary},
    {Group::kEuropeanAmerican, Group::kAfricanAmerican},
    {Group::kChristian, Group::kMuslim},
    {Group::kChristian, Group::kJewish},
    {Group::kMuslim, Group::kJewish},
}};

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_LABELS_H_
