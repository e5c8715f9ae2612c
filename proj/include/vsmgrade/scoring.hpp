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

#ifndef VSMGRADE_SCORING_HPP
#define VSMGRADE_SCORING_HPP

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "vsmgrade/error.hpp"
#include "vsmgrade/ngram.hpp"
#include "vsmgrade/preprocess.hpp"
#include "vsmgrade/similarity.hpp"
#include "vsmgrade/types.hpp"
#include "vsmgrade/vsm.hpp"

namespace vsmgrade {

struct ScoringConfig {
  Metric metric = Metric::cosine;
  int ngram = 1;
  LogBase log_base = LogBase::natural;
};

struct ScoreRecord {
  std::string student_id;
  std::string question_id;
  double similarity = 0.0;
  double points = 0.0;  // similarity * question weight

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

struct StudentScore {
  std::string student_id;
  double total = 0.0;

  friend bool operator==(const StudentScore&, const StudentScore&) = default;
};

/// Scores answers to one question. The IDF corpus is the model answer plus
/// every answer the scorer was built with; fitting finishes in the
/// constructor, after which score() is const and thread-safe. `lex` must
/// outlive the scorer.
class QuestionScorer {
 public:
  QuestionScorer(const QuestionSpec& spec, std::span<const RawEssay> answers,
                 const ScoringConfig& config, const Lexicons& lex)
      : spec_(spec), config_(config), lex_(&lex) {
    check_ngram_order(config.ngram);
    std::vector<NGramProfile> corpus;
    corpus.reserve(answers.size() + 1);
    corpus.push_back(profile(spec.model_answer));
    for (const RawEssay& answer : answers) {
      if (answer.question_id != spec.question_id) {
        throw Error(ErrorKind::QuestionMismatch, "answer of " + answer.student_id + " is for " +
                                                     answer.question_id + ", not " + spec.question_id);
      }
      corpus.push_back(profile(answer.text));
    }
    vocab_ = fit_vocabulary(corpus, config.log_base);
    model_vector_ = transform(corpus.front(), vocab_);
  }

  ScoreRecord score(const RawEssay& answer) const {
    if (answer.question_id != spec_.question_id) {
      throw Error(ErrorKind::QuestionMismatch, "answer of " + answer.student_id + " is for " +
                                                   answer.question_id + ", not " + spec_.question_id);
    }
    const TermVector vector = transform(profile(answer.text), vocab_);
    const double sim = similarity(config_.metric, vector, model_vector_).value;
    return {answer.student_id, answer.question_id, sim, sim * spec_.weight};
  }

  const Vocabulary& vocabulary() const noexcept { return vocab_; }
  const TermVector& model_vector() const noexcept { return model_vector_; }
  const QuestionSpec& spec() const noexcept { return spec_; }

 private:
  NGramProfile profile(const std::string& text) const {
    return extract_ngrams(preprocess(text, *lex_), config_.ngram);
  }

  QuestionSpec spec_;
  ScoringConfig config_;
  const Lexicons* lex_;
  Vocabulary vocab_;
  TermVector model_vector_;
};

/// Scores one answer. `peer_answers` are the answers to the same question;
/// `answer` joins the IDF corpus if its student is not already among them.
inline ScoreRecord score_question(const RawEssay& answer, const QuestionSpec& spec,
                                  const ScoringConfig& config, const Lexicons& lex,
                                  std::span<const RawEssay> peer_answers) {
  if (answer.question_id != spec.question_id) {
    throw Error(ErrorKind::QuestionMismatch,
                "answer is for " + answer.question_id + ", spec is " + spec.question_id);
  }
  std::vector<RawEssay> corpus(peer_answers.begin(), peer_answers.end());
  const bool included = std::any_of(corpus.begin(), corpus.end(), [&](const RawEssay& e) {
    return e.student_id == answer.student_id;
  });
  if (!included) corpus.push_back(answer);
  return QuestionScorer(spec, corpus, config, lex).score(answer);
}

/// Scores every answer; rows come back sorted by (student_id, question_id).
/// Each question's vocabulary is fit on that question's answers only.
inline std::vector<ScoreRecord> score_corpus(std::span<const RawEssay> answers,
                                             std::span<const QuestionSpec> specs,
                                             const ScoringConfig& config, const Lexicons& lex) {
  std::map<std::string, const QuestionSpec*> by_id;
  for (const auto& spec : specs) by_id.emplace(spec.question_id, &spec);
  std::map<std::string, std::vector<RawEssay>> grouped;
  for (const auto& answer : answers) {
    if (!by_id.contains(answer.question_id)) {
      throw Error(ErrorKind::UnknownQuestion, "answer of " + answer.student_id +
                                                  " references unknown question " + answer.question_id);
    }
    grouped[answer.question_id].push_back(answer);
  }
  std::vector<ScoreRecord> records;
  records.reserve(answers.size());
  for (const auto& [question_id, group] : grouped) {
    const QuestionScorer scorer(*by_id.at(question_id), group, config, lex);
    for (const auto& answer : group) records.push_back(scorer.score(answer));
  }
  std::sort(records.begin(), records.end(), [](const ScoreRecord& a, const ScoreRecord& b) {
    return std::tie(a.student_id, a.question_id) < std::tie(b.student_id, b.question_id);
  });
  return records;
}

/// Sums one student's points. An empty list yields a zero total.
inline StudentScore aggregate_student(std::span<const ScoreRecord> records) {
  StudentScore result;
  if (records.empty()) return result;
  result.student_id = records.front().student_id;
  for (const auto& r : records) {
    if (r.student_id != result.student_id) {
      throw Error(ErrorKind::MixedStudents,
                  "records for " + result.student_id + " and " + r.student_id + " mixed");
    }
    result.total += r.points;
  }
  return result;
}

/// Per-student totals sorted by student_id. Points are summed in
/// question_id order when `records` comes from score_corpus.
inline std::vector<StudentScore> aggregate_all(std::span<const ScoreRecord> records) {
  std::map<std::string, std::vector<ScoreRecord>> by_student;
  for (const auto& r : records) by_student[r.student_id].push_back(r);
  std::vector<StudentScore> totals;
  totals.reserve(by_student.size());
  for (const auto& [_, group] : by_student) totals.push_back(aggregate_student(group));
  return totals;
}

}  // namespace vsmgrade

#endif  // VSMGRADE_SCORING_HPP
