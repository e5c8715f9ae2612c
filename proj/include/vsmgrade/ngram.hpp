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

#ifndef VSMGRADE_NGRAM_HPP
#define VSMGRADE_NGRAM_HPP

#include <string>
#include <vector>

#include "vsmgrade/error.hpp"
#include "vsmgrade/types.hpp"

namespace vsmgrade {

inline constexpr int kMinNgram = 1;
inline constexpr int kMaxNgram = 3;

/// Word n-grams of one document, gram i = tokens[i..i+n) joined by ' '.
struct NGramProfile {
  int n = 1;
  std::vector<std::string> grams;
};

inline void check_ngram_order(int n) {
  if (n < kMinNgram || n > kMaxNgram) {
    throw Error(ErrorKind::InvalidN, "n-gram order must be 1, 2 or 3, got " + std::to_string(n));
  }
}

inline NGramProfile extract_ngrams(const TokenSequence& tokens, int n) {
  check_ngram_order(n);
  NGramProfile profile{n, {}};
  const auto width = static_cast<std::size_t>(n);
  if (tokens.size() < width) return profile;
  profile.grams.reserve(tokens.size() - width + 1);
  for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (std::size_t k = 1; k < width; ++k) {
      gram.push_back(' ');
      gram += tokens[i + k];
    }
    profile.grams.push_back(std::move(gram));
  }
  return profile;
}

}  // namespace vsmgrade

#endif  // VSMGRADE_NGRAM_HPP
