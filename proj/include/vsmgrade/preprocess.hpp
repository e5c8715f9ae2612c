// Copyright 2026 The vsmgrade Authors
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

// Text pipeline: clean -> case fold -> tokenize -> normalize -> drop stopwords.
//
// "Alphabetic" means any code point with a Unicode letter general category
// (Lu, Ll, Lt, Lm, Lo). Everything else, including digits, marks and bytes that
// are not valid UTF-8, is treated as a separator.

#ifndef VSMGRADE_PREPROCESS_HPP
#define VSMGRADE_PREPROCESS_HPP

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "vsmgrade/types.hpp"

namespace vsmgrade {

namespace detail {

inline void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(reinterpret_cast<uint8_t*>(buf), len, c);
  out.append(buf, static_cast<std::size_t>(len));
}

// Calls fn(code_point, byte_offset, byte_length) for each code point; invalid
// sequences are reported with a negative code point.
template <typename Fn>
void for_each_code_point(std::string_view s, Fn&& fn) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    fn(c, static_cast<std::size_t>(start), static_cast<std::size_t>(i - start));
  }
}

}  // namespace detail

inline bool is_letter(UChar32 c) noexcept { return c >= 0 && u_isalpha(c); }

/// True if `s` contains any Unicode white-space code point.
inline bool contains_whitespace(std::string_view s) {
  bool found = false;
  detail::for_each_code_point(s, [&](UChar32 c, std::size_t, std::size_t) {
    if (c >= 0 && u_isUWhiteSpace(c)) found = true;
  });
  return found;
}

/// Replaces every non-letter with a space, collapses space runs and trims.
inline std::string clean_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  detail::for_each_code_point(raw, [&](UChar32 c, std::size_t offset, std::size_t len) {
    if (!is_letter(c)) {
      pending_space = true;
      return;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(raw.substr(offset, len));
  });
  return out;
}

/// Unicode simple lowercase mapping, one code point at a time. Invalid bytes
/// pass through untouched.
inline std::string case_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  detail::for_each_code_point(s, [&](UChar32 c, std::size_t offset, std::size_t len) {
    if (c < 0) {
      out.append(s.substr(offset, len));
    } else {
      detail::append_utf8(out, u_tolower(c));
    }
  });
  return out;
}

/// Splits cleaned text on single spaces.
inline TokenSequence tokenize(std::string_view s) {
  TokenSequence tokens;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find(' ', start);
    if (end == std::string_view::npos) end = s.size();
    if (end > start) tokens.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

/// Single-pass dictionary replacement of whole tokens.
inline TokenSequence normalize_tokens(TokenSequence tokens, const Lexicons& lex) {
  for (std::string& token : tokens) {
    if (auto it = lex.normalization.find(token); it != lex.normalization.end()) {
      token = it->second;
    }
  }
  return tokens;
}

inline TokenSequence remove_stopwords(TokenSequence tokens, const Lexicons& lex) {
  std::erase_if(tokens, [&](const std::string& t) { return lex.stopwords.contains(t); });
  return tokens;
}

inline TokenSequence preprocess(std::string_view raw, const Lexicons& lex) {
  return remove_stopwords(normalize_tokens(tokenize(case_fold(clean_text(raw))), lex), lex);
}

}  // namespace vsmgrade

#endif  // VSMGRADE_PREPROCESS_HPP
