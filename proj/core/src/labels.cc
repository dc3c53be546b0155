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

#include "affect_audit/labels.h"
#include "affect_audit/str_util.h"

#include <string>


namespace affect_audit {

std::string_view EmotionName(Emotion e) {
  switch (e) {
    case Emotion::kAnger:
      return "anger";
    case Emotion::kFear:
      return "fear";
    case Emotion::kJoy:
      return "joy";
    case Emotion::kSadness:
      return "sadness";
  }
  return "?";
}

std::string_view EmotionTitle(Emotion e) {
  switch (e) {
    case Emotion::kAnger:
      return "Anger";
    case Emotion::kFear:
      return "Fear";
    case Emotion::kJoy:
      return "Joy";
    case Emotion::kSadness:
      return "Sadness";
  }
  return "?";
}

std::string_view DomainName(Domain d) {
  switch (d) {
    case Domain::kGender:
      return "gender";
    case Domain::kRace:
      return "race";
    case Domain::kReligion:
      return "religion";
  }
  return "?";
}

std::string_view GroupName(Group g) {
  switch (g) {
    case Group::kMale:
      return "M";
    case Group::kFemale:
      return "F";
    case Group::kNonBinary:
      return "Nb";
    case Group::kEuropeanAmerican:
      return "EA";
    case Group::kAfricanAmerican:
      return "AA";
    case Group::kChristian:
      return "Ch";
    case Group::kMuslim:
      return "Mu";
    case Group::kJewish:
      return "Jw";
  }
  return "?";
}

std::optional<Emotion> ParseEmotion(std::string_view s) {
  const std::string lower = AsciiStrToLower(StripAsciiWhitespace(s));
  for (Emotion e : kAllEmotions) {
    if (lower == EmotionName(e)) return e;
  }
  return std::nullopt;
}

std::optional<Domain> ParseDomain(std::string_view s) {
  const std::string lower = AsciiStrToLower(StripAsciiWhitespace(s));
  for (Domain d : kAllDomains) {
    if (lower == DomainName(d)) return d;
  }
  return std::nullopt;
}

std::optional<Group> ParseGroup(std::string_view s) {
  std::string lower = AsciiStrToLower(StripAsciiWhitespace(s));
  for (char& c : lower) {
    if (c == '_' || c == '-') c = ' ';
  }
  for (Group g : kAllGroups) {
    if (lower == AsciiStrToLower(GroupName(g))) return g;
  }
  struct Alias {
    std::string_view name;
    Group group;
  };
  static constexpr Alias kAliases[] = {
      {"male", Group::kMale},
      {"man", Group::kMale},
      {"female", Group::kFemale},
      {"woman", Group::kFemale},
      {"non binary", Group::kNonBinary},
      {"nonbinary", Group::kNonBinary},
      {"european american", Group::kEuropeanAmerican},
      {"european", Group::kEuropeanAmerican},
      {"african american", Group::kAfricanAmerican},
      {"african", Group::kAfricanAmerican},
      {"christian", Group::kChristian},
      {"muslim", Group::kMuslim},
      {"jewish", Group::kJewish},
      {"jew", Group::kJewish},
  };
  for (const Alias& alias : kAliases) {
    if (lower == alias.name) return alias.group;
  }
  return std::nullopt;
}

}  // namespace affect_audit
