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

#ifndef VSMGRADE_INGEST_HPP
#define VSMGRADE_INGEST_HPP

#include <charconv>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsmgrade/csv.hpp"
#include "vsmgrade/error.hpp"
#include "vsmgrade/preprocess.hpp"
#include "vsmgrade/types.hpp"

namespace vsmgrade {

inline const csv::Row kAnswersHeader{"student_id", "question_id", "answer_text"};
inline const csv::Row kModelHeader{"question_id", "model_answer", "weight"};
inline const csv::Row kGradesHeader{"student_id", "question_id", "score"};
inline const csv::Row kNormalizationHeader{"slang", "formal"};

namespace detail {

inline std::string_view trim_ascii(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

inline std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

// Finite decimal number; surrounding ASCII blanks are ignored.
inline double parse_decimal(std::string_view field, const std::string& where) {
  const std::string_view s = trim_ascii(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::MalformedCsv, where + ": '" + std::string(field) + "' is not a decimal number");
  }
  return value;
}

inline void require_id(const std::string& id, std::string_view column, const std::string& where) {
  if (id.empty()) throw Error(ErrorKind::EmptyId, where + ": empty " + std::string(column));
}

inline std::string format_exact(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

inline std::vector<RawEssay> load_answers(const std::filesystem::path& path) {
  const csv::Table table = csv::read_table(path, kAnswersHeader);
  std::vector<RawEssay> essays;
  essays.reserve(table.rows.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string at = detail::where(path, table.lines[i]);
    detail::require_id(row[0], "student_id", at);
    detail::require_id(row[1], "question_id", at);
    if (!seen.emplace(row[0], row[1]).second) {
      throw Error(ErrorKind::DuplicateKey, at + ": repeated (" + row[0] + ", " + row[1] + ")");
    }
    essays.push_back({row[0], row[1], row[2]});
  }
  return essays;
}

inline std::vector<QuestionSpec> load_model(const std::filesystem::path& path) {
  const csv::Table table = csv::read_table(path, kModelHeader);
  std::vector<QuestionSpec> specs;
  specs.reserve(table.rows.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string at = detail::where(path, table.lines[i]);
    detail::require_id(row[0], "question_id", at);
    if (!seen.insert(row[0]).second) {
      throw Error(ErrorKind::DuplicateKey, at + ": repeated question_id " + row[0]);
    }
    if (detail::trim_ascii(row[1]).empty()) {
      throw Error(ErrorKind::EmptyModelAnswer, at + ": question " + row[0] + " has no model answer");
    }
    const double weight = detail::parse_decimal(row[2], at);
    if (weight < 0.0) {
      throw Error(ErrorKind::NegativeWeight, at + ": weight " + row[2] + " for question " + row[0]);
    }
    specs.push_back({row[0], row[1], weight});
  }
  return specs;
}

inline std::vector<HumanGrade> load_grades(const std::filesystem::path& path) {
  const csv::Table table = csv::read_table(path, kGradesHeader);
  std::vector<HumanGrade> grades;
  grades.reserve(table.rows.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string at = detail::where(path, table.lines[i]);
    detail::require_id(row[0], "student_id", at);
    detail::require_id(row[1], "question_id", at);
    if (!seen.emplace(row[0], row[1]).second) {
      throw Error(ErrorKind::DuplicateKey, at + ": repeated (" + row[0] + ", " + row[1] + ")");
    }
    const double score = detail::parse_decimal(row[2], at);
    if (score < 0.0) throw Error(ErrorKind::NegativeScore, at + ": score " + row[2]);
    grades.push_back({row[0], row[1], score});
  }
  return grades;
}

namespace detail {

inline std::string lexicon_entry(std::string_view raw, const std::string& at) {
  const std::string_view s = trim_ascii(raw);
  if (s.empty()) throw Error(ErrorKind::MalformedCsv, at + ": empty lexicon entry");
  if (contains_whitespace(s)) {
    throw Error(ErrorKind::MultiTokenEntry, at + ": '" + std::string(s) + "' is not a single token");
  }
  return case_fold(s);
}

}  // namespace detail

inline std::set<std::string> load_stopwords(const std::filesystem::path& path) {
  const std::string text = csv::read_file(path);
  std::set<std::string> words;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view entry = detail::trim_ascii(line);
    if (number == 1 && entry.starts_with("\xEF\xBB\xBF")) entry.remove_prefix(3);
    if (entry.empty() || entry.front() == '#') continue;
    words.insert(detail::lexicon_entry(entry, detail::where(path, number)));
  }
  return words;
}

inline std::map<std::string, std::string> load_normalization(const std::filesystem::path& path) {
  const csv::Table table = csv::read_table(path, kNormalizationHeader);
  std::map<std::string, std::string> map;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::string at = detail::where(path, table.lines[i]);
    std::string slang = detail::lexicon_entry(table.rows[i][0], at);
    std::string formal = detail::lexicon_entry(table.rows[i][1], at);
    if (!map.emplace(slang, std::move(formal)).second) {
      throw Error(ErrorKind::DuplicateKey, at + ": repeated slang entry " + slang);
    }
  }
  return map;
}

/// Either path may be empty, meaning "no such lexicon".
inline Lexicons load_lexicons(const std::filesystem::path& stopword_path,
                              const std::filesystem::path& normalization_path) {
  Lexicons lex;
  if (!stopword_path.empty()) lex.stopwords = load_stopwords(stopword_path);
  if (!normalization_path.empty()) lex.normalization = load_normalization(normalization_path);
  return lex;
}

// Serializers produce files the loaders read back to identical records.

inline std::string answers_to_csv(const std::vector<RawEssay>& essays) {
  std::vector<csv::Row> rows;
  for (const auto& e : essays) rows.push_back({e.student_id, e.question_id, e.text});
  return csv::to_string(kAnswersHeader, rows);
}

inline std::string model_to_csv(const std::vector<QuestionSpec>& specs) {
  std::vector<csv::Row> rows;
  for (const auto& s : specs) rows.push_back({s.question_id, s.model_answer, detail::format_exact(s.weight)});
  return csv::to_string(kModelHeader, rows);
}

inline std::string grades_to_csv(const std::vector<HumanGrade>& grades) {
  std::vector<csv::Row> rows;
  for (const auto& g : grades) rows.push_back({g.student_id, g.question_id, detail::format_exact(g.score)});
  return csv::to_string(kGradesHeader, rows);
}

}  // namespace vsmgrade

#endif  // VSMGRADE_INGEST_HPP
