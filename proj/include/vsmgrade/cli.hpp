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

// Command layer behind the `vsmgrade` executable. Data goes to files in the
// output directory, diagnostics to `err`. Exit status: 0 success, 1 input
// error, 2 usage error.

#ifndef VSMGRADE_CLI_HPP
#define VSMGRADE_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vsmgrade/csv.hpp"
#include "vsmgrade/error.hpp"
#include "vsmgrade/ingest.hpp"
#include "vsmgrade/report.hpp"
#include "vsmgrade/scoring.hpp"

namespace vsmgrade::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUsageError = 2;

struct RunConfig {
  Metric metric = Metric::cosine;
  int ngram = 1;
  std::filesystem::path answers;
  std::filesystem::path model;
  std::filesystem::path grades;
  std::filesystem::path stopwords;
  std::filesystem::path normalization;
  std::filesystem::path out = ".";
  bool dump_vocabulary = false;
};

struct Inputs {
  std::vector<RawEssay> answers;
  std::vector<QuestionSpec> model;
  std::vector<HumanGrade> grades;
  Lexicons lexicons;
};

inline Inputs load_inputs(const RunConfig& config, bool with_grades) {
  Inputs in;
  in.answers = load_answers(config.answers);
  in.model = load_model(config.model);
  if (with_grades) in.grades = load_grades(config.grades);
  in.lexicons = load_lexicons(config.stopwords, config.normalization);
  return in;
}

namespace detail {

inline void write_output(const RunConfig& config, const std::string& name, const std::string& contents) {
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) throw Error(ErrorKind::MissingFile, "cannot create output directory '" + config.out.string() + "'");
  csv::write_file(config.out / name, contents);
}

inline void report_warnings(const EvaluationReport& report, std::ostream& err) {
  if (!report.unmatched_students.empty()) {
    err << "warning: " << report.unmatched_students.size()
        << " student(s) in grades have no scored answers, skipped:";
    for (const auto& s : report.unmatched_students) err << ' ' << s;
    err << '\n';
  }
  if (report.unmatched_answers > 0) {
    err << "warning: " << report.unmatched_answers << " grade(s) have no matching answer, skipped\n";
  }
}

inline EvaluationReport evaluate(const Inputs& in, const ScoringConfig& scoring) {
  const auto records = score_corpus(in.answers, in.model, scoring, in.lexicons);
  return evaluate_scores(records, in.grades, scoring);
}

inline std::string ngram_name(int n) {
  static constexpr std::array<const char*, 3> names{"unigram", "bigram", "trigram"};
  return names.at(static_cast<std::size_t>(n - 1));
}

}  // namespace detail

/// Writes scores.csv and totals.csv.
inline int cmd_score(const RunConfig& config, std::ostream& err) {
  try {
    const Inputs in = load_inputs(config, false);
    const ScoringConfig scoring{config.metric, config.ngram};
    const auto records = score_corpus(in.answers, in.model, scoring, in.lexicons);
    detail::write_output(config, "scores.csv", scores_to_csv(records));
    detail::write_output(config, "totals.csv", totals_to_csv(aggregate_all(records)));
    if (config.dump_vocabulary) {
      std::map<std::string, std::vector<RawEssay>> grouped;
      for (const auto& a : in.answers) grouped[a.question_id].push_back(a);
      for (const auto& spec : in.model) {
        const QuestionScorer scorer(spec, grouped[spec.question_id], scoring, in.lexicons);
        detail::write_output(config, "vocab_" + spec.question_id + ".csv", vocabulary_to_csv(scorer.vocabulary()));
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

/// Writes evaluation.csv (RMSE per question plus overall), stats.csv and
/// anova.csv for one configuration.
inline int cmd_evaluate(const RunConfig& config, std::ostream& err) {
  try {
    const Inputs in = load_inputs(config, true);
    const EvaluationReport report = detail::evaluate(in, {config.metric, config.ngram});
    detail::report_warnings(report, err);
    if (!report.overall_rmse) {
      err << "error: no graded students to evaluate\n";
      return kExitInputError;
    }
    detail::write_output(config, "evaluation.csv", csv::to_string(kRmseHeader, rmse_rows(report)));

    std::vector<csv::Row> stats;
    std::vector<csv::Row> anova;
    if (report.students.size() >= 2) {
      stats.push_back(stats_row("system_" + std::string(to_string(config.metric)) + "_" +
                                    detail::ngram_name(config.ngram),
                                report.system_totals));
      stats.push_back(stats_row("human", report.human_totals));
    } else {
      err << "warning: descriptive statistics need at least 2 students\n";
    }
    if (report.students.size() >= 3) {
      anova.push_back(anova_row("system_vs_human", repeated_measures_anova(report.system_totals, report.human_totals)));
    } else {
      err << "warning: repeated-measures ANOVA needs at least 3 students\n";
    }
    detail::write_output(config, "stats.csv", csv::to_string(kStatsHeader, stats));
    detail::write_output(config, "anova.csv", csv::to_string(kAnovaHeader, anova));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

/// Runs all six (metric, n) configurations, writes compare.csv and
/// compare_minima.csv, and prints one metric-by-n table per question to `out`.
inline int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Inputs in = load_inputs(config, true);
    constexpr std::array metrics{Metric::cosine, Metric::jaccard};

    std::vector<EvaluationReport> reports;
    for (Metric metric : metrics) {
      for (int n = kMinNgram; n <= kMaxNgram; ++n) reports.push_back(detail::evaluate(in, {metric, n}));
    }
    detail::report_warnings(reports.front(), err);
    if (!reports.front().overall_rmse) {
      err << "error: no graded students to evaluate\n";
      return kExitInputError;
    }

    std::vector<csv::Row> rows;
    for (const auto& report : reports) {
      auto r = rmse_rows(report);
      rows.insert(rows.end(), r.begin(), r.end());
    }
    detail::write_output(config, "compare.csv", csv::to_string(kRmseHeader, rows));

    // cell[question][metric index][n - 1]
    std::map<std::string, std::array<std::array<std::optional<double>, 3>, 2>> cells;
    std::vector<std::string> order;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const std::size_t m = i / 3;
      const std::size_t n = i % 3;
      for (const auto& q : reports[i].per_question) {
        if (!cells.contains(q.question_id)) order.push_back(q.question_id);
        cells[q.question_id][m][n] = q.rmse;
      }
      if (reports[i].overall_rmse) cells[std::string(kOverallLabel)][m][n] = *reports[i].overall_rmse;
    }
    std::sort(order.begin(), order.end());
    order.emplace_back(kOverallLabel);

    std::array<std::vector<csv::Row>, 2> minima;
    for (const auto& question : order) {
      const auto& grid = cells[question];
      out << (question == kOverallLabel ? std::string("Overall (per-student totals)") : "Question " + question)
          << '\n';
      out << std::left << std::setw(10) << "" << std::right;
      for (int n = kMinNgram; n <= kMaxNgram; ++n) out << std::setw(11) << detail::ngram_name(n) + " ";
      out << '\n';
      for (std::size_t m = 0; m < metrics.size(); ++m) {
        std::optional<std::size_t> best;
        for (std::size_t n = 0; n < 3; ++n) {
          if (grid[m][n] && (!best || *grid[m][n] < *grid[m][*best])) best = n;
        }
        out << std::left << std::setw(10) << to_string(metrics[m]) << std::right;
        for (std::size_t n = 0; n < 3; ++n) {
          std::string cell = grid[m][n] ? format_fixed(*grid[m][n], 4) : "-";
          cell += (best && *best == n) ? "*" : " ";
          out << std::setw(11) << cell;
        }
        out << '\n';
        if (best) {
          minima[m].push_back({std::string(to_string(metrics[m])), question, std::to_string(*best + 1),
                               format_fixed(*grid[m][*best], 4)});
        }
      }
      out << '\n';
    }
    minima[0].insert(minima[0].end(), minima[1].begin(), minima[1].end());
    detail::write_output(config, "compare_minima.csv", csv::to_string(kMinimaHeader, minima[0]));

    for (std::size_t m = 0; m < metrics.size(); ++m) {
      std::optional<std::pair<std::string, std::size_t>> best;
      for (const auto& question : order) {
        if (question == kOverallLabel) continue;
        for (std::size_t n = 0; n < 3; ++n) {
          const auto& v = cells[question][m][n];
          if (v && (!best || *v < *cells[best->first][m][best->second])) best = {{question, n}};
        }
      }
      if (best) {
        out << "lowest " << to_string(metrics[m]) << " RMSE: "
            << format_fixed(*cells[best->first][m][best->second], 4) << " (question " << best->first << ", "
            << detail::ngram_name(static_cast<int>(best->second) + 1) << ")\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

/// Parses `args` (args[0] is the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essay scoring with n-gram TF-IDF vectors and Cosine/Jaccard similarity"};
  app.require_subcommand(1);

  RunConfig config;
  std::string metric = "cosine";

  auto add_common = [&](CLI::App* cmd, bool with_grades, bool with_config) {
    cmd->add_option("--answers", config.answers, "answers.csv (student_id,question_id,answer_text)")->required();
    cmd->add_option("--model", config.model, "model.csv (question_id,model_answer,weight)")->required();
    if (with_grades) cmd->add_option("--grades", config.grades, "grades.csv (student_id,question_id,score)")->required();
    cmd->add_option("--stopwords", config.stopwords, "stopword list, one token per line");
    cmd->add_option("--normalization", config.normalization, "normalization.csv (slang,formal)");
    if (with_config) {
      cmd->add_option("--metric", metric, "similarity metric")
          ->check(CLI::IsMember({"cosine", "jaccard"}))
          ->capture_default_str();
      cmd->add_option("--ngram", config.ngram, "n-gram order")->check(CLI::IsMember({1, 2, 3}))->capture_default_str();
    }
    cmd->add_option("--out", config.out, "output directory")->capture_default_str();
  };

  CLI::App* score = app.add_subcommand("score", "score every answer against its model answer");
  add_common(score, false, true);
  score->add_flag("--dump-vocab", config.dump_vocabulary, "also write vocab_<question>.csv (term,df,idf)");
  CLI::App* evaluate = app.add_subcommand("evaluate", "compare system scores with human grades");
  add_common(evaluate, true, true);
  CLI::App* compare = app.add_subcommand("compare", "RMSE grid over both metrics and n = 1, 2, 3");
  add_common(compare, true, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << "usage: vsmgrade {score|evaluate|compare} --answers FILE --model FILE [options]\n";
    return kExitUsageError;
  }
  config.metric = *parse_metric(metric);

  if (score->parsed()) return cmd_score(config, err);
  if (evaluate->parsed()) return cmd_evaluate(config, err);
  return cmd_compare(config, out, err);
}

}  // namespace vsmgrade::cli

#endif  // VSMGRADE_CLI_HPP
