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

#ifndef VSMGRADE_TYPES_HPP
#define VSMGRADE_TYPES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace vsmgrade {

/// One student's unprocessed answer to one question.
struct RawEssay {
  std::string student_id;
  std::string question_id;
  std::string text;

  friend bool operator==(const RawEssay&, const RawEssay&) = default;
};

/// The teacher's reference answer and the maximum points for a question.
struct QuestionSpec {
  std::string question_id;
  std::string model_answer;
  double weight = 0.0;

  friend bool operator==(const QuestionSpec&, const QuestionSpec&) = default;
};

struct HumanGrade {
  std::string student_id;
  std::string question_id;
  double score = 0.0;

  friend bool operator==(const HumanGrade&, const HumanGrade&) = default;
};

/// Stopword set and slang-to-formal dictionary. All entries are lowercase
/// single tokens.
struct Lexicons {
  std::set<std::string> stopwords;
  std::map<std::string, std::string> normalization;

  friend bool operator==(const Lexicons&, const Lexicons&) = default;
};

/// Normalized tokens in original text order.
using TokenSequence = std::vector<std::string>;

}  // namespace vsmgrade

#endif  // VSMGRADE_TYPES_HPP
