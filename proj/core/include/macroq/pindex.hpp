// Scaling exponent p_e from e_max samples over a family of states.
//
// e_max(L) ~ L^(p_e - 1) "for almost every instance" is estimated by taking
// the per-L median over sampled instances, then an ordinary least-squares fit
// of log(median) against log(L): p_e = 1 + slope. The median keeps rare
// exceptional instances from moving the estimate.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace macroq {

struct FamilyPoint {
  int num_sites = 0;
  std::string instance;  ///< seed or solution list, for reporting only
  double e_max = 0.0;
};

struct FamilySample {
  std::string label;
  std::vector<FamilyPoint> points;
};

enum class PClass { PEq2, PEq1, Intermediate };

const char* pclass_name(PClass c);

struct FitOptions {
  /// Sizes below this are dropped before fitting.
  int min_sites = 8;
  double upper_band = 1.8;  ///< p_e >= upper_band -> P_EQ_2
  double lower_band = 1.2;  ///< p_e <= lower_band -> P_EQ_1
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

struct IndexEstimate {
  std::string family;
  double p_e = 0.0;
  double slope_stderr = 0.0;
  PClass classification = PClass::Intermediate;
  /// e_max = a L + b on the same medians, reported alongside; not used for
  /// the classification.
  LinearFit linear;
  std::vector<int> sizes;        ///< distinct L used by the fit
  std::vector<double> medians;   ///< per-L median e_max
  bool in_sanity_band = true;    ///< p_e within [0.5, 2.5]
};

/// Sample median; averages the two middle values for even counts.
double median_over_instances(std::span<const double> values);

/// Ordinary least squares y = slope x + intercept with the slope's standard
/// error (zero for an exact fit).
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

PClass classify(double p_e, const FitOptions& options = {});

/// Throws std::invalid_argument when fewer than 4 distinct sizes remain
/// after filtering and std::domain_error on a non-positive e_max.
IndexEstimate fit_pe(const FamilySample& sample, const FitOptions& options = {});

/// { "family":, "p_e":, "stderr":, "classification":, "points": [...] }
void write_fit_json(std::ostream& os, const IndexEstimate& estimate, const FamilySample& sample);

}  // namespace macroq
