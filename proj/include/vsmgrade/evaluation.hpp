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

#ifndef VSMGRADE_EVALUATION_HPP
#define VSMGRADE_EVALUATION_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "vsmgrade/error.hpp"

namespace vsmgrade {

/// One human grade paired with the system score for the same subject.
struct ScorePair {
  double human = 0.0;
  double system = 0.0;
};

using PairedScores = std::vector<ScorePair>;

inline double rmse(std::span<const ScorePair> pairs) {
  if (pairs.empty()) throw Error(ErrorKind::EmptyInput, "rmse of zero pairs");
  double sum = 0.0;
  for (const auto& p : pairs) {
    const double e = p.human - p.system;
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(pairs.size()));
}

inline double mean(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::TooFewValues, "mean of zero values");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

/// Sample standard deviation (n - 1 denominator), two-pass.
inline double sample_std(std::span<const double> values) {
  if (values.size() < 2) throw Error(ErrorKind::TooFewValues, "standard deviation needs at least 2 values");
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

struct DescriptiveStats {
  double mean = 0.0;
  double std = 0.0;
  double cv = 0.0;  // percent
};

inline double coefficient_of_variation(double mean, double std) {
  if (mean == 0.0) throw Error(ErrorKind::ZeroMean, "coefficient of variation undefined for zero mean");
  return std / mean * 100.0;
}

inline DescriptiveStats descriptive_stats(std::span<const double> values) {
  if (values.size() < 2) throw Error(ErrorKind::TooFewValues, "descriptive statistics need at least 2 values");
  DescriptiveStats s;
  s.mean = mean(values);
  s.std = sample_std(values);
  s.cv = coefficient_of_variation(s.mean, s.std);
  return s;
}

namespace detail {

// Continued fraction for the incomplete beta function, modified Lentz.
inline double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 200;
  constexpr double kEpsilon = 1e-12;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace detail

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "beta parameters must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidArgument, "x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * detail::beta_continued_fraction(b, a, 1.0 - x) / b;
}

/// Upper tail P(F > f) of the F distribution with (df1, df2) degrees of freedom.
inline double f_survival(double f, int df1, int df2) {
  if (df1 < 1 || df2 < 1) {
    throw Error(ErrorKind::InvalidDf, "degrees of freedom must be positive, got (" +
                                          std::to_string(df1) + ", " + std::to_string(df2) + ")");
  }
  if (std::isnan(f) || f < 0.0) throw Error(ErrorKind::InvalidArgument, "F statistic must be >= 0");
  if (f == 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  const double d1 = df1;
  const double d2 = df2;
  const double x = d2 / (d2 + d1 * f);
  const double p = regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, x);
  return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

/// Two-condition within-subject ANOVA. With k = 2 levels the effect has one
/// degree of freedom, eta_sq is partial eta squared and Wilks's lambda is
/// 1 - eta_sq.
struct AnovaResult {
  double f = 0.0;
  double p = 1.0;
  double eta_sq = 0.0;
  double wilks_lambda = 1.0;
  int df_effect = 1;
  int df_error = 0;
  /// Every subject differs by the same nonzero amount: zero error variance,
  /// reported as f = +inf and p = 0.
  bool degenerate = false;
};

/// `a[i]` and `b[i]` are the two conditions measured on subject i. The F ratio
/// comes from the sum-of-squares partition (conditions / subjects / residual).
inline AnovaResult repeated_measures_anova(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "conditions have " + std::to_string(a.size()) + " and " +
                                               std::to_string(b.size()) + " subjects");
  }
  const std::size_t n = a.size();
  if (n < 3) throw Error(ErrorKind::TooFewSubjects, "at least 3 subjects required, got " + std::to_string(n));

  AnovaResult result;
  result.df_error = static_cast<int>(n - 1);

  // Constant differences leave no residual; decide exactly rather than
  // through a rounded residual sum.
  const double first_diff = a[0] - b[0];
  bool constant_diff = true;
  for (std::size_t i = 1; i < n && constant_diff; ++i) constant_diff = (a[i] - b[i]) == first_diff;
  if (constant_diff) {
    if (first_diff == 0.0) return result;
    result.f = std::numeric_limits<double>::infinity();
    result.p = 0.0;
    result.eta_sq = 1.0;
    result.wilks_lambda = 0.0;
    result.degenerate = true;
    return result;
  }

  const double mean_a = mean(a);
  const double mean_b = mean(b);
  const double grand = (mean_a + mean_b) / 2.0;
  const double ss_conditions =
      static_cast<double>(n) * ((mean_a - grand) * (mean_a - grand) + (mean_b - grand) * (mean_b - grand));
  double ss_error = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double subject = (a[i] + b[i]) / 2.0;
    const double ra = a[i] - subject - mean_a + grand;
    const double rb = b[i] - subject - mean_b + grand;
    ss_error += ra * ra + rb * rb;
  }
  const double ms_error = ss_error / static_cast<double>(result.df_error);
  result.f = ss_conditions / ms_error;
  result.p = f_survival(result.f, result.df_effect, result.df_error);
  result.eta_sq = result.f / (result.f + static_cast<double>(result.df_error));
  result.wilks_lambda = 1.0 - result.eta_sq;
  return result;
}

}  // namespace vsmgrade

#endif  // VSMGRADE_EVALUATION_HPP
