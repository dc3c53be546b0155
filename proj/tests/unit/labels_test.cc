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

#include <set>

#include "gtest/gtest.h"

namespace affect_audit {
namespace {

TEST(LabelsTest, FourEmotionsInFixedOrder) {
  ASSERT_EQ(kAllEmotions.size(), 4u);
  EXPECT_EQ(EmotionName(kAllEmotions[0]), "anger");
  EXPECT_EQ(EmotionName(kAllEmotions[1]), "fear");
  EXPECT_EQ(EmotionName(kAllEmotions[2]), "joy");
  EXPECT_EQ(EmotionName(kAllEmotions[3]), "sadness");
  EXPECT_LT(Emotion::kAnger, Emotion::kFear);
  EXPECT_LT(Emotion::kJoy, Emotion::kSadness);
}

TEST(LabelsTest, EveryGroupBelongsToOneDomain) {
  std::set<std::string_view> names;
  for (Group g : kAllGroups) names.insert(GroupName(g));
  EXPECT_EQ(names.size(), 8u);
  EXPECT_EQ(DomainOf(Group::kMale), Domain::kGender);
  EXPECT_EQ(DomainOf(Group::kNonBinary), Domain::kGender);
  EXPECT_EQ(DomainOf(Group::kAfricanAmerican), Domain::kRace);
  EXPECT_EQ(DomainOf(Group::kJewish), Domain::kReligion);
}

TEST(LabelsTest, ParsersRoundTripAndAcceptAliases) {
  for (Emotion e : kAllEmotions) EXPECT_EQ(ParseEmotion(EmotionName(e)), e);
  for (Domain d : kAllDomains) EXPECT_EQ(ParseDomain(DomainName(d)), d);
  for (Group g : kAllGroups) EXPECT_EQ(ParseGroup(GroupName(g)), g);
  EXPECT_EQ(ParseEmotion(" Joy "), Emotion::kJoy);
  EXPECT_EQ(ParseGroup("female"), Group::kFemale);
  EXPECT_EQ(ParseGroup("African-American"), Group::kAfricanAmerican);
  EXPECT_EQ(ParseGroup("non_binary"), Group::kNonBinary);
  EXPECT_FALSE(ParseEmotion("surprise").has_value());
  EXPECT_FALSE(ParseGroup("martian").has_value());
}

TEST(LabelsTest, StandardPairingsStayWithinDomains) {
  EXPECT_EQ(kStandardPairings.size(), 7u);
  for (const GroupPair& p : kStandardPairings) {
    EXPECT_NE(p.a, p.b);
    EXPECT_EQ(DomainOf(p.a), DomainOf(p.b));
  }
}

}  // namespace
}  // namespace affect_audit
