#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace diverse {

// Category counts of one unit of analysis (a city, a journal): one column of
// the occurrence matrix. Entries are finite and nonnegative; length >= 1.
class PortfolioVector {
 public:
  // Throws DomainError on empty input or a negative/non-finite entry.
  explicit PortfolioVector(std::vector<double> counts);
  explicit PortfolioVector(std::span<const double> counts)
      : PortfolioVector(std::vector<double>(counts.begin(), counts.end())) {}

  std::span<const double> counts() const noexcept { return counts_; }
  // N: number of possible categories, zeros included.
  std::size_t size() const noexcept { return counts_.size(); }
  // n_c: number of categories with a count strictly greater than zero.
  std::size_t n_present() const noexcept { return n_present_; }
  bool empty_support() const noexcept { return n_present_ == 0; }
  double total() const noexcept { return total_; }

  // p_i = x_i / sum(x), length N. Empty when the support is empty.
  std::vector<double> proportions() const;
  // The positive entries in category order.
  std::vector<double> positive_entries() const;
  // 1.0 on the support, 0.0 elsewhere.
  std::vector<double> support_mask() const;

 private:
  std::vector<double> counts_;
  double total_ = 0.0;
  std::size_t n_present_ = 0;
};

}  // namespace diverse
