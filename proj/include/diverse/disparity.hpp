#pragma once
// Similarity and disparity matrices between categories.

#include <cstddef>
#include <span>

#include "diverse/matrix.hpp"

namespace diverse {

inline constexpr double kDefaultSymmetryTolerance = 1e-9;

// Documents (rows) x categories (columns), all entries finite and >= 0.
class OccurrenceMatrix {
 public:
  // Throws ShapeError on an empty matrix, RangeError on a negative or
  // non-finite entry.
  explicit OccurrenceMatrix(DenseMatrix values);

  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t categories() const noexcept { return values_.cols(); }
  const DenseMatrix& matrix() const noexcept { return values_; }

 private:
  DenseMatrix values_;
};

class DisparityMatrix;

// Symmetric, unit diagonal, entries in [0, 1]. Only obtainable through
// validation or construction, so the invariants always hold.
class SimilarityMatrix {
 public:
  std::size_t size() const noexcept { return values_.rows(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }
  const DenseMatrix& matrix() const noexcept { return values_; }

 private:
  explicit SimilarityMatrix(DenseMatrix values) : values_(std::move(values)) {}
  DenseMatrix values_;

  friend SimilarityMatrix validate_similarity(const DenseMatrix&, double);
  friend SimilarityMatrix cosine_similarity(const OccurrenceMatrix&);
  friend SimilarityMatrix to_similarity(const DisparityMatrix&);
};

// Symmetric, zero diagonal, entries in [0, 1].
class DisparityMatrix {
 public:
  std::size_t size() const noexcept { return values_.rows(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }
  const DenseMatrix& matrix() const noexcept { return values_; }
  // Row-major N*N storage.
  std::span<const double> values() const noexcept { return values_.values(); }

 private:
  explicit DisparityMatrix(DenseMatrix values) : values_(std::move(values)) {}
  DenseMatrix values_;

  friend DisparityMatrix validate_disparity(const DenseMatrix&, double);
  friend DisparityMatrix to_disparity(const SimilarityMatrix&);
};

// Cosine between every pair of category columns. Self-similarity is forced
// to 1; a zero column has similarity 0 to every other column.
SimilarityMatrix cosine_similarity(const OccurrenceMatrix& occurrences);

// Accepts a square matrix whose asymmetry is within `tolerance`, whose
// diagonal is within `tolerance` of 1 and whose entries lie in
// [-tolerance, 1 + tolerance]. The result is the symmetrised average with a
// unit diagonal, clamped to [0, 1].
// Throws ShapeError, SymmetryError (naming the worst cell) or RangeError.
SimilarityMatrix validate_similarity(const DenseMatrix& raw,
                                     double tolerance = kDefaultSymmetryTolerance);

// Same checks for a ready-made disparity matrix, with a zero diagonal.
DisparityMatrix validate_disparity(const DenseMatrix& raw,
                                   double tolerance = kDefaultSymmetryTolerance);

// d_ij = 1 - s_ij off the diagonal, d_ii = 0.
DisparityMatrix to_disparity(const SimilarityMatrix& similarity);
// s_ij = 1 - d_ij off the diagonal, s_ii = 1.
SimilarityMatrix to_similarity(const DisparityMatrix& disparity);

}  // namespace diverse
