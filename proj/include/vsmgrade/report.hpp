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

// Report files: scores, totals, RMSE grid, descriptive statistics and the
// two-condition ANOVA. Rounding happens here and only here.

#ifndef VSMGRADE_REPORT_HPP
#define VSMGRADE_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vsmgrade/csv.hpp"
#include "vsmgrade/evaluation.hpp"
#include "vsmgrade/scoring.hpp"
#include "vsmgrade/types.hpp"

namespace vsmgrade {

inline std::string format_fixed(double value, int decimals) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  // "-0.00" -> "0.00"
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline const csv::Row kScoresHeader{"student_id", "question_id", "similarity", "points"};
inline const csv::Row kTotalsHeader{"student_id", "total"};
inline const csv::Row kRmseHeader{"question_id", "metric", "ngram", "rmse"};
inline const csv::Row kStatsHeader{"source", "mean", "std", "cv"};
inline const csv::Row kAnovaHeader{"source", "f", "df_effect", "df_error", "wilks_lambda", "p", "eta_sq"};
inline const csv::Row kMinimaHeader{"metric", "question_id", "ngram", "rmse"};

/// Label of the row that pools all questions through per-student totals.
inline constexpr std::string_view kOverallLabel = "overall";

inline std::string scores_to_csv(std::span<const ScoreRecord> records) {
  std::vector<csv::Row> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    rows.push_back({r.student_id, r.question_id, format_fixed(r.similarity, 4), format_fixed(r.points, 4)});
  }
  return csv::to_string(kScoresHeader, rows);
}

inline std::string totals_to_csv(std::span<const StudentScore> totals) {
  std::vector<csv::Row> rows;
  rows.reserve(totals.size());
  for (const auto& t : totals) rows.push_back({t.student_id, format_fixed(t.total, 2)});
  return csv::to_string(kTotalsHeader, rows);
}

struct QuestionRmse {
  std::string question_id;
  double rmse = 0.0;
  std::size_t pairs = 0;
};

/// Agreement between one scoring configuration and the human grades.
struct EvaluationReport {
  Metric metric = Metric::cosine;
  int ngram = 1;
  std::vector<QuestionRmse> per_question;  // sorted by question_id
  std::optional<double> overall_rmse;      // over per-student totals
  std::vector<std::string> students;       // students in the overall row, sorted
  std::vector<double> system_totals;       // aligned with `students`
  std::vector<double> human_totals;
  std::vector<std::string> unmatched_students;  // grades skipped: student never scored
  std::size_t unmatched_answers = 0;           // grades skipped: student scored, question not
};

/// Pairs grades with scores by (student_id, question_id). Grades for students
/// the system never scored are skipped and listed in `unmatched_students`.
inline EvaluationReport evaluate_scores(std::span<const ScoreRecord> records,
                                        std::span<const HumanGrade> grades,
                                        const ScoringConfig& config) {
  EvaluationReport report;
  report.metric = config.metric;
  report.ngram = config.ngram;

  std::map<std::pair<std::string, std::string>, double> points;
  std::set<std::string> scored_students;
  for (const auto& r : records) {
    points.emplace(std::pair{r.student_id, r.question_id}, r.points);
    scored_students.insert(r.student_id);
  }

  // Ordered by (student, question) so totals sum in question order.
  std::map<std::pair<std::string, std::string>, ScorePair> matched;
  std::set<std::string> unmatched;
  for (const auto& g : grades) {
    if (!scored_students.contains(g.student_id)) {
      unmatched.insert(g.student_id);
      continue;
    }
    auto it = points.find({g.student_id, g.question_id});
    if (it == points.end()) {
      ++report.unmatched_answers;
      continue;
    }
    matched.emplace(it->first, ScorePair{g.score, it->second});
  }
  report.unmatched_students.assign(unmatched.begin(), unmatched.end());

  std::map<std::string, PairedScores> by_question;
  std::map<std::string, ScorePair> by_student;
  for (const auto& [key, pair] : matched) {
    by_question[key.second].push_back(pair);
    auto& total = by_student[key.first];
    total.human += pair.human;
    total.system += pair.system;
  }
  for (const auto& [question_id, pairs] : by_question) {
    report.per_question.push_back({question_id, rmse(pairs), pairs.size()});
  }
  if (!by_student.empty()) {
    PairedScores totals;
    for (const auto& [student_id, pair] : by_student) {
      report.students.push_back(student_id);
      report.system_totals.push_back(pair.system);
      report.human_totals.push_back(pair.human);
      totals.push_back(pair);
    }
    report.overall_rmse = rmse(totals);
  }
  return report;
}

/// RMSE rows for one configuration: one per question, then the overall row.
inline std::vector<csv::Row> rmse_rows(const EvaluationReport& report) {
  std::vector<csv::Row> rows;
  const std::string metric(to_string(report.metric));
  const std::string ngram = std::to_string(report.ngram);
  for (const auto& q : report.per_question) rows.push_back({q.question_id, metric, ngram, format_fixed(q.rmse, 4)});
  if (report.overall_rmse) {
    rows.push_back({std::string(kOverallLabel), metric, ngram, format_fixed(*report.overall_rmse, 4)});
  }
  return rows;
}

inline csv::Row stats_row(const std::string& source, std::span<const double> values) {
  const double m = mean(values);
  const double s = sample_std(values);
  std::string cv;
  if (m != 0.0) cv = format_fixed(coefficient_of_variation(m, s), 4);
  return {source, format_fixed(m, 4), format_fixed(s, 4), cv};
}

inline csv::Row anova_row(const std::string& source, const AnovaResult& r) {
  return {source,
          format_fixed(r.f, 4),
          std::to_string(r.df_effect),
          std::to_string(r.df_error),
          format_fixed(r.wilks_lambda, 4),
          format_fixed(r.p, 4),
          format_fixed(r.eta_sq, 4)};
}

}  // namespace vsmgrade

#endif  // VSMGRADE_REPORT_HPP
