#include "diverse/disparity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "diverse/errors.hpp"
#include "diverse/kernels.hpp"

namespace diverse {

namespace {

std::string cell_name(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Shared by both validators; `diagonal` is the required diagonal value.
DenseMatrix symmetrize_checked(const DenseMatrix& raw, double tolerance, double diagonal,
                               const char* what) {
  if (!raw.is_square()) {
    throw ShapeError(std::string(what) + " matrix must be square, got " +
                     std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
  }
  if (raw.rows() == 0) throw ShapeError(std::string(what) + " matrix is empty");
  if (!(tolerance >= 0.0)) throw RangeError("symmetry tolerance must be nonnegative");

  const std::size_t n = raw.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = raw(i, j);
      if (!std::isfinite(v) || v < -tolerance || v > 1.0 + tolerance) {
        throw RangeError(std::string(what) + " entry " + cell_name(i, j) + " = " + fmt(v) +
                         " lies outside [0, 1]");
      }
    }
  }

  double worst = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(raw(i, j) - raw(j, i));
      if (gap > worst) {
        worst = gap;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst > tolerance) {
    throw SymmetryError(std::string(what) + " matrix is not symmetric: cell " +
                            cell_name(worst_i, worst_j) + " differs from its mirror by " +
                            fmt(worst) + " (tolerance " + fmt(tolerance) + ")",
                        worst_i + 1, worst_j + 1);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(raw(i, i) - diagonal) > tolerance) {
      throw RangeError(std::string(what) + " diagonal entry " + cell_name(i, i) + " = " +
                       fmt(raw(i, i)) + ", expected " + fmt(diagonal));
    }
  }

  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = diagonal;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::clamp((raw(i, j) + raw(j, i)) / 2.0, 0.0, 1.0);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

DenseMatrix complement_off_diagonal(const DenseMatrix& m, double diagonal) {
  const std::size_t n = m.rows();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = diagonal;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 1.0 - m(i, j);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

}  // namespace

OccurrenceMatrix::OccurrenceMatrix(DenseMatrix values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0) {
    throw ShapeError("occurrence matrix needs at least one row and one column");
  }
  for (std::size_t r = 0; r < values_.rows(); ++r) {
    for (std::size_t c = 0; c < values_.cols(); ++c) {
      const double v = values_(r, c);
      if (!std::isfinite(v) || v < 0.0) {
        throw RangeError("occurrence entry " + cell_name(r, c) +
                         " is not a finite nonnegative value");
      }
    }
  }
}

SimilarityMatrix cosine_similarity(const OccurrenceMatrix& occurrences) {
  const DenseMatrix& m = occurrences.matrix();
  const std::size_t n = m.cols();

  // Column-major copy so each category vector is contiguous for the kernel.
  std::vector<std::vector<double>> columns(n);
  std::vector<double> squared_norms(n);
  for (std::size_t c = 0; c < n; ++c) {
    columns[c] = m.column(c);
    squared_norms[c] = kernels::dot(columns[c], columns[c]);
  }

  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = 0.0;
      if (squared_norms[i] > 0.0 && squared_norms[j] > 0.0) {
        // sqrt(a * a) == a exactly, so duplicated columns give exactly 1.
        const double product = squared_norms[i] * squared_norms[j];
        const double denom = std::isfinite(product)
                                 ? std::sqrt(product)
                                 : std::sqrt(squared_norms[i]) * std::sqrt(squared_norms[j]);
        v = std::clamp(kernels::dot(columns[i], columns[j]) / denom, 0.0, 1.0);
      }
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return SimilarityMatrix(std::move(s));
}

SimilarityMatrix validate_similarity(const DenseMatrix& raw, double tolerance) {
  return SimilarityMatrix(symmetrize_checked(raw, tolerance, 1.0, "similarity"));
}

DisparityMatrix validate_disparity(const DenseMatrix& raw, double tolerance) {
  return DisparityMatrix(symmetrize_checked(raw, tolerance, 0.0, "disparity"));
}

DisparityMatrix to_disparity(const SimilarityMatrix& similarity) {
  return DisparityMatrix(complement_off_diagonal(similarity.matrix(), 0.0));
}

SimilarityMatrix to_similarity(const DisparityMatrix& disparity) {
  return SimilarityMatrix(complement_off_diagonal(disparity.matrix(), 1.0));
}

}  // namespace diverse
