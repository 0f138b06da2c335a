#pragma once
// Batch indicator computation and cross-indicator correlation tables
// (Pearson below the diagonal, Spearman above).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diverse/dataio.hpp"
#include "diverse/disparity.hpp"
#include "diverse/matrix.hpp"

namespace diverse {

// One IndicatorRecord per column of `m`; column_index is 1-based.
// Throws DimensionError when m.rows() != d.size().
OutputTable batch_indicators(const DenseMatrix& m, const DisparityMatrix& d);
OutputTable batch_indicators(const MatrixFile& m, const DisparityMatrix& d);

// Average (fractional) ranks starting at 1; ties share the mean rank.
std::vector<double> average_ranks(std::span<const double> x);

// Product-moment correlation. Throws DimensionError on a length mismatch,
// DomainError for n < 3 or a constant series.
double pearson(std::span<const double> x, std::span<const double> y);

// pearson(average_ranks(x), average_ranks(y)).
double spearman(std::span<const double> x, std::span<const double> y);

enum class Significance { none, p05, p01 };

// Two-tailed critical |t| for df >= 1 at alpha 0.05 or 0.01.
double t_critical(double alpha, std::size_t df);

// Two-tailed test of t = r sqrt((n - 2) / (1 - r^2)) against t_critical.
Significance significance(double r, std::size_t n);

struct CorrelationCell {
  double coefficient = 0.0;
  std::size_t n = 0;
  Significance marker = Significance::none;
};

struct CorrelationTable {
  std::vector<std::string> indicators;
  std::size_t n = 0;  // portfolios in the source table
  // Row-major k x k. Diagonal always empty; a cell is also empty when a
  // series is constant or fewer than 3 complete pairs remain.
  std::vector<std::optional<CorrelationCell>> cells;

  std::size_t size() const noexcept { return indicators.size(); }
  const std::optional<CorrelationCell>& at(std::size_t row, std::size_t col) const {
    return cells[row * indicators.size() + col];
  }
};

// Every column name of the output table that holds a numeric indicator.
const std::vector<std::string>& indicator_names();
// rao_stirling, div, gini, variety_relative, gini_simpson, shannon.
const std::vector<std::string>& default_correlation_indicators();

// Values of one indicator across the table (coeff_variation may be absent).
// Throws UsageError for an unknown name.
std::vector<std::optional<double>> indicator_column(const OutputTable& table,
                                                    std::string_view name);

// Throws Error("need at least 3 portfolios") for fewer than 3 rows and
// UsageError for an unknown or empty indicator list.
CorrelationTable correlation_table(const OutputTable& table,
                                   std::span<const std::string> indicators);

std::string format_correlation(const CorrelationTable& table);

}  // namespace diverse
