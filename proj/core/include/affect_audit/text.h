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

#ifndef AFFECT_AUDIT_TEXT_H_
#define AFFECT_AUDIT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace affect_audit {

// Sentence segmentation.
//
// A sentence ends at a newline, or at a run of terminators (. ! ?) that is
// followed by whitespace or the end of the text. Closing quotes and brackets
// directly after the terminators stay with the sentence. A single period
// after a guarded abbreviation ("mr.", "dr.", "st.", ...) does not end a
// sentence. Sentences are trimmed of surrounding ASCII whitespace and empty
// sentences are dropped. The returned views point into `text`.
std::vector<std::string_view> SegmentSentences(std::string_view text);

// True if `word` (lowercase, without the trailing period) is on the
// abbreviation guard list.
bool IsGuardedAbbreviation(std::string_view word);

template <typename Fn>
void ForEachSentence(std::string_view text, Fn&& fn);

// Tokenization.
//
// A token is a maximal run of letters, digits, hyphens and apostrophes.
// ASCII letters are case-folded. Typographic apostrophes (U+2018, U+2019,
// U+02BC) become "'" and non-breaking hyphens (U+2010, U+2011) become "-".
// General punctuation, Latin-1 symbols, U+FFFD and invalid UTF-8 bytes are
// separators; every other non-ASCII code point is treated as a letter.
// Leading and trailing hyphens/apostrophes are trimmed from each token, so
// quoted words like 'happy' match the lexicon.
std::vector<std::string> Tokenize(std::string_view sentence);

// Folds one term the same way the tokenizer folds a token. Returns an empty
// string if the term does not survive as exactly one token.
std::string NormalizeTerm(std::string_view term);

// Replaces typographic apostrophes with ASCII "'" (used by the lexicon loader).
std::string NormalizeApostrophes(std::string_view text);

// Reusable tokenizer: calls fn(std::string_view token) for every token of
// `sentence`. The view is only valid during the callback.
class TokenCursor {
 public:
  template <typename Fn>
  void ForEach(std::string_view sentence, Fn&& fn);

 private:
  std::string buffer_;
};

// Counts of ill-formed UTF-8 sequences; each one is replaced by a space in
// `*repaired` when the input is not valid. Returns 0 and leaves `*repaired`
// untouched for valid input.
size_t RepairUtf8(std::string_view text, std::string* repaired);

namespace text_internal {

enum CharClass : unsigned char {
  kSeparator = 0,
  kLetter = 1,      // ASCII letter or digit, already folded via kFold
  kJoiner = 2,      // '-' or '\''
  kNonAscii = 3,    // lead byte of a multi-byte sequence
};

struct AsciiTables {
  unsigned char cls[256];
  char fold[256];
};

const AsciiTables& Tables();

// Decodes one UTF-8 code point at text[i]. Returns the number of bytes
// consumed (>= 1) and stores the code point, or 0xFFFFFFFF when ill-formed.
size_t DecodeUtf8(std::string_view text, size_t i, char32_t* cp);

// Classifies a non-ASCII code point: 0 separator, 1 letter, '\'' or '-'.
int ClassifyCodePoint(char32_t cp);

bool IsSentenceSpace(char c);

}  // namespace text_internal

template <typename Fn>
void TokenCursor::ForEach(std::string_view sentence, Fn&& fn) {
  const text_internal::AsciiTables& tables = text_internal::Tables();
  buffer_.clear();
  auto flush = [&]() {
    if (buffer_.empty()) return;
    size_t begin = 0;
    size_t end = buffer_.size();
    while (begin < end && (buffer_[begin] == '-' || buffer_[begin] == '\'')) {
      ++begin;
    }
    while (end > begin && (buffer_[end - 1] == '-' || buffer_[end - 1] == '\'')) {
      --end;
    }
    if (begin < end) {
      fn(std::string_view(buffer_).substr(begin, end - begin));
    }
    buffer_.clear();
  };
  size_t i = 0;
  const size_t n = sentence.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(sentence[i]);
    const unsigned char cls = tables.cls[c];
    if (cls == text_internal::kLetter || cls == text_internal::kJoiner) {
      buffer_.push_back(tables.fold[c]);
      ++i;
    } else if (cls == text_internal::kSeparator) {
      flush();
      ++i;
    } else {
      char32_t cp;
      const size_t len = text_internal::DecodeUtf8(sentence, i, &cp);
      const int kind = cp == 0xFFFFFFFF ? 0 : text_internal::ClassifyCodePoint(cp);
      if (kind == 0) {
        flush();
      } else if (kind == 1) {
        buffer_.append(sentence.data() + i, len);
      } else {
        buffer_.push_back(static_cast<char>(kind));
      }
      i += len;
    }
  }
  flush();
}

template <typename Fn>
void ForEachSentence(std::string_view text, Fn&& fn) {
  using text_internal::IsSentenceSpace;
  const size_t n = text.size();
  size_t start = 0;
  auto emit = [&](size_t begin, size_t end) {
    while (begin < end && IsSentenceSpace(text[begin])) ++begin;
    while (end > begin && IsSentenceSpace(text[end - 1])) --end;
    if (begin < end) fn(text.substr(begin, end - begin));
  };
  size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (c == '\n') {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    const size_t run_begin = i;
    while (i < n && (text[i] == '.' || text[i] == '!' || text[i] == '?')) ++i;
    const size_t run_end = i;
    while (i < n && (text[i] == '"' || text[i] == '\'' || text[i] == ')' ||
                     text[i] == ']')) {
      ++i;
    }
    if (i < n && !IsSentenceSpace(text[i])) continue;
    if (run_end - run_begin == 1 && text[run_begin] == '.') {
      // Single period: check the word before it against the guard list.
      size_t w = run_begin;
      while (w > start) {
        const char p = text[w - 1];
        const bool word_char = (p >= 'a' && p <= 'z') || (p >= 'A' && p <= 'Z') ||
                               p == '.';
        if (!word_char) break;
        --w;
      }
      char word[8];
      const size_t len = run_begin - w;
      if (len > 0 && len <= sizeof(word)) {
        for (size_t k = 0; k < len; ++k) {
          char ch = text[w + k];
          if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
          word[k] = ch;
        }
        if (IsGuardedAbbreviation(std::string_view(word, len))) continue;
      }
    }
    emit(start, i);
    start = i;
  }
  emit(start, n);
}

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_TEXT_H_
