#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "macroq/pindex.hpp"

using namespace macroq;

namespace {

FamilySample power_law(double p, double a, int lmin, int lmax) {
  FamilySample s{"synthetic", {}};
  for (int L = lmin; L <= lmax; ++L) s.points.push_back({L, "", a * std::pow(L, p - 1.0)});
  return s;
}

}  // namespace

TEST(Median, OddAndEvenCounts) {
  EXPECT_EQ(median_over_instances(std::vector<double>{3, 1, 2}), 2.0);
  EXPECT_EQ(median_over_instances(std::vector<double>{4, 1, 3, 2}), 2.5);
  EXPECT_THROW(median_over_instances(std::vector<double>{}), std::invalid_argument);
}

TEST(LeastSquares, ExactLine) {
  const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  const auto f = least_squares(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.slope_stderr, 0.0, 1e-14);
  EXPECT_THROW(least_squares(std::vector<double>{1, 1}, std::vector<double>{1, 2}),
               std::invalid_argument);
}

TEST(Classify, Bands) {
  EXPECT_EQ(classify(2.0), PClass::PEq2);
  EXPECT_EQ(classify(1.8), PClass::PEq2);
  EXPECT_EQ(classify(1.5), PClass::Intermediate);
  EXPECT_EQ(classify(1.2), PClass::PEq1);
  FitOptions loose;
  loose.upper_band = 1.4;
  EXPECT_EQ(classify(1.5, loose), PClass::PEq2);
}

TEST(FitPe, RecoversPowerLaws) {
  for (double p : {1.0, 1.37, 2.0}) {
    const auto est = fit_pe(power_law(p, 0.7, 6, 16));
    EXPECT_NEAR(est.p_e, p, 1e-12);
    EXPECT_EQ(est.sizes.front(), 8);
  }
  EXPECT_EQ(fit_pe(power_law(2.0, 1.0, 8, 12)).classification, PClass::PEq2);
  EXPECT_EQ(fit_pe(power_law(1.0, 2.0, 8, 12)).classification, PClass::PEq1);
}

TEST(FitPe, EmitsTheLinearFitToo) {
  const auto est = fit_pe(power_law(2.0, 1.0, 8, 14));
  EXPECT_NEAR(est.linear.slope, 1.0, 1e-12);
  EXPECT_NEAR(est.linear.intercept, 0.0, 1e-10);
}

TEST(FitPe, MedianIgnoresRareOutliers) {
  FamilySample s = power_law(2.0, 1.0, 8, 14);
  const auto clean = s.points;
  for (const auto& p : clean) {
    s.points.push_back(p);
    s.points.push_back({p.num_sites, "outlier", 1e-3});
  }
  EXPECT_NEAR(fit_pe(s).p_e, 2.0, 1e-12);
}

TEST(FitPe, ScaleInvariant) {
  EXPECT_NEAR(fit_pe(power_law(1.6, 1.0, 8, 14)).p_e, fit_pe(power_law(1.6, 37.0, 8, 14)).p_e, 1e-12);
}

TEST(FitPe, Errors) {
  EXPECT_THROW(fit_pe(power_law(2.0, 1.0, 8, 10)), std::invalid_argument);
  auto bad = power_law(2.0, 1.0, 8, 14);
  bad.points[2].e_max = 0.0;
  EXPECT_THROW(fit_pe(bad), std::domain_error);
}

TEST(FitPe, JsonLayout) {
  const auto sample = power_law(2.0, 1.0, 8, 11);
  const auto est = fit_pe(sample);
  std::ostringstream os;
  write_fit_json(os, est, sample);
  const std::string j = os.str();
  EXPECT_NE(j.find("\"family\": \"synthetic\""), std::string::npos);
  EXPECT_NE(j.find("\"classification\": \"P_EQ_2\""), std::string::npos);
  EXPECT_NE(j.find("\"linear_fit\""), std::string::npos);
  EXPECT_NE(j.find("\"points\""), std::string::npos);
}
