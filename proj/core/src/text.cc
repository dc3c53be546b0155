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

#include "affect_audit/text.h"
#include "affect_audit/str_util.h"

#include <algorithm>
#include <array>

namespace affect_audit {
namespace text_internal {
namespace {

AsciiTables BuildTables() {
  AsciiTables t{};
  for (int c = 0; c < 256; ++c) {
    t.fold[c] = static_cast<char>(c);
    if (c >= 0x80) {
      t.cls[c] = kNonAscii;
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      t.cls[c] = kLetter;
    } else if (c >= 'A' && c <= 'Z') {
      t.cls[c] = kLetter;
      t.fold[c] = static_cast<char>(c - 'A' + 'a');
    } else if (c == '-' || c == '\'') {
      t.cls[c] = kJoiner;
    } else {
      t.cls[c] = kSeparator;
    }
  }
  return t;
}

}  // namespace

const AsciiTables& Tables() {
  static const AsciiTables tables = BuildTables();
  return tables;
}

size_t DecodeUtf8(std::string_view text, size_t i, char32_t* cp) {
  const auto byte = [&](size_t k) { return static_cast<unsigned char>(text[k]); };
  const unsigned char b0 = byte(i);
  *cp = 0xFFFFFFFF;
  if (b0 < 0x80) {
    *cp = b0;
    return 1;
  }
  size_t len;
  char32_t value;
  char32_t min;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    len = 2;
    value = b0 & 0x1F;
    min = 0x80;
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    len = 3;
    value = b0 & 0x0F;
    min = 0x800;
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    len = 4;
    value = b0 & 0x07;
    min = 0x10000;
  } else {
    return 1;
  }
  if (i + len > text.size()) return 1;
  for (size_t k = 1; k < len; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return 1;
    value = (value << 6) | (b & 0x3F);
  }
  if (value < min || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    return 1;
  }
  *cp = value;
  return len;
}

int ClassifyCodePoint(char32_t cp) {
  if (cp == 0x2018 || cp == 0x2019 || cp == 0x02BC || cp == 0xFF07) return '\'';
  if (cp == 0x2010 || cp == 0x2011) return '-';
  if (cp < 0x80) return 0;
  if (cp <= 0xBF) return 0;  // C1 controls, NBSP, Latin-1 punctuation
  if (cp == 0xD7 || cp == 0xF7) return 0;
  if (cp >= 0x2000 && cp <= 0x206F) return 0;  // general punctuation
  if (cp >= 0x2190 && cp <= 0x2BFF) return 0;  // arrows, math, shapes
  if (cp >= 0x3000 && cp <= 0x303F) return 0;  // CJK punctuation
  if (cp >= 0xFF00 && cp <= 0xFF0F) return 0;
  if (cp == 0xFEFF || cp == 0xFFFD) return 0;
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return 0;  // emoji and pictographs
  return 1;
}

bool IsSentenceSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

}  // namespace text_internal

bool IsGuardedAbbreviation(std::string_view word) {
  static constexpr std::array<std::string_view, 19> kGuarded = {
      "capt", "col", "dr",  "e.g", "ft",  "gen", "i.e", "jr",  "lt",   "mr",
      "mrs",  "ms",  "mt",  "prof", "rev", "sgt", "sr", "st",  "vs"};
  return std::binary_search(kGuarded.begin(), kGuarded.end(), word);
}

std::vector<std::string_view> SegmentSentences(std::string_view text) {
  std::vector<std::string_view> out;
  ForEachSentence(text, [&](std::string_view s) { out.push_back(s); });
  return out;
}

std::vector<std::string> Tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  TokenCursor cursor;
  cursor.ForEach(sentence,
                 [&](std::string_view token) { tokens.emplace_back(token); });
  return tokens;
}

std::string NormalizeTerm(std::string_view term) {
  std::vector<std::string> tokens = Tokenize(term);
  if (tokens.size() != 1) return {};
  return std::move(tokens.front());
}

std::string NormalizeApostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    char32_t cp;
    const size_t len = text_internal::DecodeUtf8(text, i, &cp);
    if (cp != 0xFFFFFFFF && text_internal::ClassifyCodePoint(cp) == '\'') {
      out.push_back('\'');
    } else {
      out.append(text.data() + i, len);
    }
    i += len;
  }
  return out;
}

size_t RepairUtf8(std::string_view text, std::string* repaired) {
  size_t i = 0;
  // Fast path over ASCII.
  while (i < text.size() && static_cast<unsigned char>(text[i]) < 0x80) ++i;
  if (i == text.size()) return 0;

  size_t invalid = 0;
  std::string out;
  if (repaired != nullptr) out.assign(text.data(), i);
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      if (repaired != nullptr) out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    char32_t cp;
    const size_t len = text_internal::DecodeUtf8(text, i, &cp);
    if (cp == 0xFFFFFFFF) {
      ++invalid;
      if (repaired != nullptr) out.push_back(' ');
    } else if (repaired != nullptr) {
      out.append(text.data() + i, len);
    }
    i += len;
  }
  if (repaired != nullptr && invalid > 0) *repaired = std::move(out);
  return invalid;
}

}  // namespace affect_audit
