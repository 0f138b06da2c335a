#include "diverse/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "diverse/errors.hpp"
#include "diverse/kernels.hpp"

namespace diverse {

namespace {

void require_support(const PortfolioVector& v, const char* indicator) {
  if (v.empty_support()) {
    throw DomainError(std::string(indicator) + " undefined on empty support");
  }
}

void require_matching(const PortfolioVector& v, const DisparityMatrix& d) {
  if (v.size() != d.size()) {
    throw DimensionError("portfolio has " + std::to_string(v.size()) +
                         " categories but the disparity matrix is " + std::to_string(d.size()) +
                         "x" + std::to_string(d.size()));
  }
}

}  // namespace

double gini(const PortfolioVector& v) {
  require_support(v, "gini");
  std::vector<double> x = v.positive_entries();
  std::stable_sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  const double total = kernels::sum(x);
  // The rank coefficients sum to zero, so shifting by the minimum leaves the
  // numerator unchanged and makes it exactly 0 for equal entries.
  const double lowest = x.front();
  for (double& xi : x) xi -= lowest;
  const double g = kernels::rank_weighted_sum(x) / (n * total);
  return std::clamp(g, 0.0, (n - 1.0) / n);
}

double relative_variety(const PortfolioVector& v) noexcept {
  return static_cast<double>(v.n_present()) / static_cast<double>(v.size());
}

double gini_simpson(const PortfolioVector& v) {
  require_support(v, "gini-simpson");
  const std::vector<double> p = v.proportions();
  return std::clamp(1.0 - kernels::dot(p, p), 0.0, 1.0);
}

ShannonEntropy shannon(const PortfolioVector& v) {
  require_support(v, "shannon");
  double h = 0.0;
  for (double x : v.counts()) {
    if (x > 0.0) {
      const double p = x / v.total();
      h -= p * std::log2(p);
    }
  }
  const double bound = std::log2(static_cast<double>(v.n_present()));
  return {std::clamp(h, 0.0, bound), std::log2(static_cast<double>(v.size()))};
}

double rao_stirling(const PortfolioVector& v, const DisparityMatrix& d) {
  require_matching(v, d);
  require_support(v, "rao-stirling");
  const std::vector<double> p = v.proportions();
  // The diagonal of d is zero, so p' D p is exactly the i != j sum.
  return std::clamp(kernels::quadratic_form(p, d.values()), 0.0, 1.0);
}

double mean_disparity(const PortfolioVector& v, const DisparityMatrix& d) {
  require_matching(v, d);
  const std::size_t n = v.n_present();
  if (n <= 1) return 0.0;
  const std::vector<double> mask = v.support_mask();
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return std::clamp(kernels::quadratic_form(mask, d.values()) / pairs, 0.0, 1.0);
}

DivFactors div_factors(const PortfolioVector& v, const DisparityMatrix& d) {
  require_matching(v, d);
  if (v.empty_support()) return {};
  return {relative_variety(v), gini(v), mean_disparity(v, d)};
}

double div(const PortfolioVector& v, const DisparityMatrix& d) {
  return div_factors(v, d).product();
}

double coefficient_of_variation(const PortfolioVector& v) {
  require_support(v, "coefficient of variation");
  const std::vector<double> x = v.positive_entries();
  const double n = static_cast<double>(x.size());
  const double mean = kernels::sum(x) / n;
  double ss = 0.0;
  for (double xi : x) ss += (xi - mean) * (xi - mean);
  return std::sqrt(ss / n) / mean;
}

IndicatorRecord indicator_record(std::size_t column_index, const PortfolioVector& v,
                                 const DisparityMatrix& d) {
  require_matching(v, d);
  IndicatorRecord r;
  r.column_index = column_index;
  r.n_total = v.size();
  r.n_present = v.n_present();
  r.h_max = std::log2(static_cast<double>(v.size()));
  if (v.empty_support()) return r;

  const DivFactors factors = div_factors(v, d);
  r.rao_stirling = rao_stirling(v, d);
  r.div = factors.product();
  r.gini = factors.gini;
  r.gini_simpson = gini_simpson(v);
  r.shannon = shannon(v).bits;
  r.variety_relative = factors.relative_variety;
  r.coeff_variation = coefficient_of_variation(v);
  return r;
}

}  // namespace diverse
