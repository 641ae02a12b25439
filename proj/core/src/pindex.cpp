#include "macroq/pindex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "macroq/format.hpp"

namespace macroq {

const char* pclass_name(PClass c) {
  switch (c) {
    case PClass::PEq2:
      return "P_EQ_2";
    case PClass::PEq1:
      return "P_EQ_1";
    case PClass::Intermediate:
      return "INTERMEDIATE";
  }
  return "?";
}

double median_over_instances(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw std::invalid_argument("least_squares needs >= 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares: all x values coincide");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (fit.slope * x[i] + fit.intercept);
      rss += r * r;
    }
    fit.slope_stderr = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  }
  return fit;
}

PClass classify(double p_e, const FitOptions& options) {
  if (p_e >= options.upper_band) return PClass::PEq2;
  if (p_e <= options.lower_band) return PClass::PEq1;
  return PClass::Intermediate;
}

IndexEstimate fit_pe(const FamilySample& sample, const FitOptions& options) {
  std::map<int, std::vector<double>> by_size;
  for (const auto& p : sample.points) {
    if (!(p.e_max > 0.0)) {
      throw std::domain_error("non-positive e_max " + format_number(p.e_max) + " at L = " +
                              std::to_string(p.num_sites));
    }
    if (p.num_sites >= options.min_sites) by_size[p.num_sites].push_back(p.e_max);
  }
  if (by_size.size() < 4) {
    throw std::invalid_argument("fit needs at least 4 distinct sizes with L >= " +
                                std::to_string(options.min_sites) + ", got " +
                                std::to_string(by_size.size()));
  }

  IndexEstimate est;
  est.family = sample.label;
  std::vector<double> log_l, log_e, sizes_d;
  for (const auto& [size, values] : by_size) {
    const double med = median_over_instances(values);
    est.sizes.push_back(size);
    est.medians.push_back(med);
    sizes_d.push_back(size);
    log_l.push_back(std::log(static_cast<double>(size)));
    log_e.push_back(std::log(med));
  }
  const LinearFit loglog = least_squares(log_l, log_e);
  est.p_e = 1.0 + loglog.slope;
  est.slope_stderr = loglog.slope_stderr;
  est.classification = classify(est.p_e, options);
  est.linear = least_squares(sizes_d, est.medians);
  est.in_sanity_band = est.p_e >= 0.5 && est.p_e <= 2.5;
  return est;
}

void write_fit_json(std::ostream& os, const IndexEstimate& estimate, const FamilySample& sample) {
  const ClassicLocaleGuard classic(os);
  nlohmann::ordered_json j;
  j["family"] = estimate.family;
  j["p_e"] = round_significant(estimate.p_e);
  j["stderr"] = round_significant(estimate.slope_stderr);
  j["classification"] = pclass_name(estimate.classification);
  j["linear_fit"] = {{"slope", round_significant(estimate.linear.slope)},
                     {"intercept", round_significant(estimate.linear.intercept)},
                     {"slope_stderr", round_significant(estimate.linear.slope_stderr)}};
  auto medians = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < estimate.sizes.size(); ++i) {
    medians.push_back({{"L", estimate.sizes[i]}, {"median_e_max", round_significant(estimate.medians[i])}});
  }
  j["medians"] = std::move(medians);
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : sample.points) {
    points.push_back({{"L", p.num_sites}, {"instance", p.instance}, {"e_max", round_significant(p.e_max)}});
  }
  j["points"] = std::move(points);
  os << j.dump(2) << '\n';
}

}  // namespace macroq
