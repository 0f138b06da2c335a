#pragma once
// Diversity indicators for a single portfolio.
//
// Variety, balance and disparity are computed independently and then
// recombined: DIV = (n_c / N) * Gini * mean pairwise disparity over the
// occupied categories. Rao-Stirling, Gini-Simpson and Shannon are provided
// for comparison.
//
// All functions are pure. Scalar indicators that are undefined on an
// all-zero portfolio throw DomainError; indicator_record() is total.

#include <cstddef>
#include <optional>

#include "diverse/disparity.hpp"
#include "diverse/portfolio.hpp"

namespace diverse {

struct ShannonEntropy {
  double bits = 0.0;      // H = -sum p_i log2 p_i
  double max_bits = 0.0;  // log2 N over all categories
};

// The three factors of DIV, each in [0, 1].
struct DivFactors {
  double relative_variety = 0.0;
  double gini = 0.0;
  double mean_disparity = 0.0;

  double product() const noexcept { return relative_variety * gini * mean_disparity; }
};

struct IndicatorRecord {
  std::size_t column_index = 0;  // 1-based position in the input matrix
  double rao_stirling = 0.0;
  double div = 0.0;
  double gini = 0.0;
  double gini_simpson = 0.0;
  double shannon = 0.0;
  double h_max = 0.0;
  double variety_relative = 0.0;
  std::size_t n_total = 0;
  std::size_t n_present = 0;
  std::optional<double> coeff_variation;  // absent for an all-zero portfolio

  friend bool operator==(const IndicatorRecord&, const IndicatorRecord&) = default;
};

// Gini coefficient of the positive entries, via the ascending-rank form
//   G = sum_i (2i - n - 1) x_(i) / (n sum_i x_i).
// Zeros are excluded. Result lies in [0, (n - 1) / n].
double gini(const PortfolioVector& v);

// n_c / N; 0 for an all-zero portfolio.
double relative_variety(const PortfolioVector& v) noexcept;

// 1 - sum p_i^2.
double gini_simpson(const PortfolioVector& v);

ShannonEntropy shannon(const PortfolioVector& v);

// sum over ordered pairs i != j of p_i p_j d_ij.
double rao_stirling(const PortfolioVector& v, const DisparityMatrix& d);

// Average of d_ij over ordered pairs of distinct occupied categories.
// 0 when fewer than two categories are occupied.
double mean_disparity(const PortfolioVector& v, const DisparityMatrix& d);

DivFactors div_factors(const PortfolioVector& v, const DisparityMatrix& d);

// div_factors(v, d).product(); 0 for an all-zero portfolio.
double div(const PortfolioVector& v, const DisparityMatrix& d);

// Population standard deviation over mean, on the positive entries.
double coefficient_of_variation(const PortfolioVector& v);

IndicatorRecord indicator_record(std::size_t column_index, const PortfolioVector& v,
                                 const DisparityMatrix& d);

}  // namespace diverse
