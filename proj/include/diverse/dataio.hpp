#pragma once
// Readers and writers for the headerless matrix files and the indicator
// output table.
//
// Matrix files are comma-separated, one row per line, no header. Occurrence
// matrices have documents or categories as rows and units of analysis as
// columns; a similarity file is a symmetric N x N block with a unit
// diagonal. All real numbers are written in the shortest form that reparses
// to the same double, so writes are byte-deterministic.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diverse/disparity.hpp"
#include "diverse/matrix.hpp"
#include "diverse/measures.hpp"

namespace diverse {

inline constexpr std::string_view kOutputHeader =
    "column,label,rao_stirling,div,gini,gini_simpson,shannon,h_max,variety_relative,n_total,"
    "n_present,coeff_variation";

struct MatrixFile {
  std::filesystem::path path;
  DenseMatrix values;
  std::vector<std::string> labels;  // empty, or one per column
};

// One record per analysed column, in column order.
struct OutputTable {
  std::vector<IndicatorRecord> records;
  std::vector<std::string> labels;  // empty, or one per record

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }
};

struct ParseOptions {
  // Matrix files must be nonnegative; similarity files defer range checks to
  // validation so that rounding slack within tolerance is accepted.
  bool nonnegative = true;
  std::string source = "input";  // used as the error-message prefix
};

// Throws ParseError citing the 1-based line (and field) on ragged rows,
// non-numeric or non-finite fields, negative values, or empty input.
DenseMatrix parse_matrix(std::string_view text, const ParseOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);

MatrixFile load_matrix(const std::filesystem::path& path);

// One label per line. When `expected` is given the count must match.
std::vector<std::string> load_labels(const std::filesystem::path& path,
                                     std::optional<std::size_t> expected = std::nullopt);

SimilarityMatrix load_similarity(const std::filesystem::path& path,
                                 double tolerance = kDefaultSymmetryTolerance);
DisparityMatrix load_disparity(const std::filesystem::path& path,
                               double tolerance = kDefaultSymmetryTolerance);

// Headerless CSV, loadable again by parse_matrix.
std::string format_matrix(const DenseMatrix& m);

// Throws Error("no columns analyzed") on an empty table.
std::string format_output(const OutputTable& table);
OutputTable parse_output(std::string_view text);
OutputTable load_output(const std::filesystem::path& path);

// Writes via a temporary file in the same directory and renames it into
// place, so a failure never leaves a partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

void write_output(const OutputTable& table, const std::filesystem::path& path);

}  // namespace diverse
