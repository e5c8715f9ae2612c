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

#include <gtest/gtest.h>

#include <boost/math/distributions/fisher_f.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "vsmgrade/evaluation.hpp"

namespace vsmgrade {
namespace {

template <typename Fn>
ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InvalidArgument;
}

TEST(RmseTest, Examples) {
  EXPECT_EQ(rmse(PairedScores{{5, 5}, {7, 7}}), 0.0);
  EXPECT_NEAR(rmse(PairedScores{{3, 0}, {0, 4}}), 3.5355, 1e-4);
  EXPECT_DOUBLE_EQ(rmse(PairedScores{{3, 0}, {0, 4}}), std::sqrt(12.5));
  EXPECT_EQ(rmse(PairedScores{{10, 8}}), 2.0);
  EXPECT_EQ(error_kind([] { rmse(PairedScores{}); }), ErrorKind::EmptyInput);
}

TEST(RmsePropertyTest, NonNegativeSymmetricZeroIffEqual) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> score(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    PairedScores pairs(1 + rng() % 20);
    for (auto& p : pairs) p = {score(rng), rng() % 4 == 0 ? -1.0 : score(rng)};
    bool equal = true;
    for (auto& p : pairs) {
      if (p.system < 0) p.system = p.human;
      equal = equal && p.system == p.human;
    }
    PairedScores swapped;
    for (const auto& p : pairs) swapped.push_back({p.system, p.human});
    const double r = rmse(pairs);
    EXPECT_GE(r, 0.0);
    EXPECT_EQ(r, rmse(swapped));
    EXPECT_EQ(r == 0.0, equal);
  }
}

TEST(DescriptiveStatsTest, ConstantData) {
  const std::vector<double> v{5, 5, 5, 5};
  const auto s = descriptive_stats(v);
  EXPECT_EQ(s.mean, 5.0);
  EXPECT_EQ(s.std, 0.0);
  EXPECT_EQ(s.cv, 0.0);
}

TEST(DescriptiveStatsTest, SampleStandardDeviation) {
  const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
  const auto s = descriptive_stats(v);
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
  EXPECT_DOUBLE_EQ(s.std, std::sqrt(32.0 / 7.0));
  EXPECT_DOUBLE_EQ(s.cv, std::sqrt(32.0 / 7.0) / 5.0 * 100.0);
}

TEST(DescriptiveStatsTest, CoefficientOfVariationFromReportedMeanAndStd) {
  // Two points at mean +- std/sqrt(2) have exactly the requested sample std.
  auto data = [](double mean, double std) {
    const double h = std / std::sqrt(2.0);
    return std::vector<double>{mean - h, mean + h};
  };
  const auto system = descriptive_stats(data(79.0, 3.46));
  EXPECT_NEAR(system.mean, 79.0, 1e-12);
  EXPECT_NEAR(system.std, 3.46, 1e-12);
  EXPECT_NEAR(system.cv, 4.385, 0.01);
  EXPECT_NEAR(system.cv, 4.3797, 1e-4);
  const auto human = descriptive_stats(data(78.0, 2.45));
  EXPECT_NEAR(human.cv, 3.140, 0.01);
  EXPECT_NEAR(human.cv, 3.1410, 1e-4);
}

TEST(DescriptiveStatsTest, Errors) {
  EXPECT_EQ(error_kind([] { descriptive_stats(std::vector<double>{1.0}); }), ErrorKind::TooFewValues);
  EXPECT_EQ(error_kind([] { descriptive_stats(std::vector<double>{-1.0, 1.0}); }), ErrorKind::ZeroMean);
}

TEST(DescriptiveStatsPropertyTest, CoefficientOfVariationIsScaleFree) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> value(1.0, 100.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> v(2 + rng() % 20);
    for (auto& x : v) x = value(rng);
    std::vector<double> scaled = v;
    const double k = scale(rng);
    for (auto& x : scaled) x *= k;
    EXPECT_NEAR(descriptive_stats(scaled).cv, descriptive_stats(v).cv, 1e-9);
  }
}

TEST(FSurvivalTest, Examples) {
  EXPECT_EQ(f_survival(0.0, 1, 10), 1.0);
  EXPECT_NEAR(f_survival(4.965, 1, 10), 0.050, 1e-3);
  EXPECT_LT(f_survival(1e6, 1, 10), 1e-6);
  EXPECT_EQ(f_survival(std::numeric_limits<double>::infinity(), 1, 10), 0.0);
  EXPECT_EQ(error_kind([] { f_survival(1.0, 0, 10); }), ErrorKind::InvalidDf);
  EXPECT_EQ(error_kind([] { f_survival(1.0, 1, -2); }), ErrorKind::InvalidDf);
  EXPECT_EQ(error_kind([] { f_survival(-1.0, 1, 2); }), ErrorKind::InvalidArgument);
}

TEST(FSurvivalTest, AgreesWithBoostAcrossDegreesOfFreedom) {
  for (int df1 : {1, 2, 3, 5, 10, 50, 200, 1000}) {
    for (int df2 : {1, 2, 3, 7, 10, 30, 100, 500, 1000}) {
      const boost::math::fisher_f_distribution<double> dist(df1, df2);
      for (double f : {0.01, 0.1, 0.5, 1.0, 2.0, 4.965, 10.0, 50.0, 500.0}) {
        EXPECT_NEAR(f_survival(f, df1, df2), boost::math::cdf(boost::math::complement(dist, f)), 1e-6)
            << "f=" << f << " df=(" << df1 << "," << df2 << ")";
      }
    }
  }
}

TEST(FSurvivalPropertyTest, MonotoneDecreasing) {
  for (int df2 : {1, 4, 29, 300}) {
    double previous = 1.0;
    for (double f = 0.0; f < 60.0; f += 0.05) {
      const double p = f_survival(f, 1, df2);
      EXPECT_LE(p, previous + 1e-15);
      previous = p;
    }
  }
}

TEST(RegularizedIncompleteBetaTest, KnownValues) {
  EXPECT_NEAR(regularized_incomplete_beta(1.0, 1.0, 0.3), 0.3, 1e-12);
  EXPECT_NEAR(regularized_incomplete_beta(2.0, 3.0, 0.4), 0.5248, 1e-12);  // polynomial closed form
  EXPECT_EQ(regularized_incomplete_beta(2.0, 3.0, 0.0), 0.0);
  EXPECT_EQ(regularized_incomplete_beta(2.0, 3.0, 1.0), 1.0);
}

TEST(RepeatedMeasuresAnovaTest, ZeroEffect) {
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{3, 2, 1};
  const auto r = repeated_measures_anova(a, b);
  EXPECT_EQ(r.f, 0.0);
  EXPECT_EQ(r.p, 1.0);
  EXPECT_EQ(r.eta_sq, 0.0);
  EXPECT_EQ(r.wilks_lambda, 1.0);
  EXPECT_EQ(r.df_error, 2);
  EXPECT_FALSE(r.degenerate);
}

TEST(RepeatedMeasuresAnovaTest, HandCheckedPairedDifferences) {
  const std::vector<double> a{80, 83, 85, 78};
  const std::vector<double> b{78, 80, 82, 76};
  const auto r = repeated_measures_anova(a, b);
  EXPECT_NEAR(r.f, 75.0, 1e-9);
  EXPECT_NEAR(r.eta_sq, 75.0 / 78.0, 1e-12);
  EXPECT_NEAR(r.eta_sq, 0.9615, 1e-4);
  EXPECT_EQ(r.df_effect, 1);
  EXPECT_EQ(r.df_error, 3);
  EXPECT_NEAR(r.p, 0.0032390370765444, 1e-9);
  EXPECT_EQ(r.eta_sq + r.wilks_lambda, 1.0);
}

TEST(RepeatedMeasuresAnovaTest, IdenticalConditions) {
  const std::vector<double> a{4, 9, 1, 7};
  const auto r = repeated_measures_anova(a, a);
  EXPECT_EQ(r.f, 0.0);
  EXPECT_EQ(r.p, 1.0);
}

TEST(RepeatedMeasuresAnovaTest, ConstantNonZeroDifferenceIsDegenerate) {
  const std::vector<double> a{12, 15, 11};
  const std::vector<double> b{10, 13, 9};
  const auto r = repeated_measures_anova(a, b);
  EXPECT_TRUE(r.degenerate);
  EXPECT_TRUE(std::isinf(r.f));
  EXPECT_EQ(r.p, 0.0);
  EXPECT_EQ(r.eta_sq + r.wilks_lambda, 1.0);
}

TEST(RepeatedMeasuresAnovaTest, Errors) {
  const std::vector<double> three{1, 2, 3};
  const std::vector<double> two{1, 2};
  EXPECT_EQ(error_kind([&] { repeated_measures_anova(three, two); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(error_kind([&] { repeated_measures_anova(two, two); }), ErrorKind::TooFewSubjects);
}

}  // namespace
}  // namespace vsmgrade
