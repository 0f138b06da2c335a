#include "diverse/portfolio.hpp"

#include <cmath>
#include <string>

#include "diverse/errors.hpp"
#include "diverse/kernels.hpp"
#include "diverse/matrix.hpp"

namespace diverse {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw ShapeError("matrix storage holds " + std::to_string(values_.size()) +
                     " values, expected " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

PortfolioVector::PortfolioVector(std::vector<double> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw DomainError("portfolio vector must have at least one category");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const double x = counts_[i];
    if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("portfolio entry " + std::to_string(i + 1) +
                        " is not a finite nonnegative value");
    }
    if (x > 0.0) ++n_present_;
    // Normalise -0.0 so formatting and comparisons stay canonical.
    if (x == 0.0) counts_[i] = 0.0;
  }
  total_ = kernels::sum(counts_);
}

std::vector<double> PortfolioVector::proportions() const {
  if (empty_support()) return {};
  std::vector<double> p(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) p[i] = counts_[i] / total_;
  return p;
}

std::vector<double> PortfolioVector::positive_entries() const {
  std::vector<double> out;
  out.reserve(n_present_);
  for (double x : counts_) {
    if (x > 0.0) out.push_back(x);
  }
  return out;
}

std::vector<double> PortfolioVector::support_mask() const {
  std::vector<double> mask(counts_.size(), 0.0);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > 0.0) mask[i] = 1.0;
  }
  return mask;
}

}  // namespace diverse
