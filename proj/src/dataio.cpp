#include "diverse/dataio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "diverse/csv.hpp"
#include "diverse/errors.hpp"

namespace diverse {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string where(const std::string& source, std::size_t line, std::size_t column = 0) {
  std::string out = source + ": line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out;
}

double parse_real(std::string_view field, const ParseOptions& options, std::size_t line,
                  std::size_t column) {
  const std::string_view text = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(where(options.source, line, column) + ": '" + std::string(field) +
                         "' is not a number",
                     line, column);
  }
  if (!std::isfinite(value)) {
    throw ParseError(where(options.source, line, column) + ": value is not finite", line,
                     column);
  }
  if (options.nonnegative && value < 0.0) {
    throw ParseError(where(options.source, line, column) + ": negative value " +
                         std::string(text),
                     line, column);
  }
  return value == 0.0 ? 0.0 : value;
}

std::size_t parse_count(std::string_view field, std::size_t line, std::size_t column) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(where("table", line, column) + ": '" + std::string(field) +
                         "' is not a count",
                     line, column);
  }
  return value;
}

std::vector<std::string_view> content_lines(std::string_view text, const std::string& source) {
  std::vector<std::string_view> lines = csv::split_lines(text);
  if (lines.empty()) throw ParseError(source + ": file is empty");
  return lines;
}

}  // namespace

DenseMatrix parse_matrix(std::string_view text, const ParseOptions& options) {
  const std::vector<std::string_view> lines = content_lines(text, options.source);
  std::size_t cols = 0;
  std::vector<double> values;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (trim(lines[i]).empty()) {
      throw ParseError(where(options.source, line_no) + ": empty line", line_no);
    }
    std::size_t fields = 0;
    std::size_t start = 0;
    const std::string_view line = lines[i];
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
      ++fields;
      values.push_back(parse_real(line.substr(start, end - start), options, line_no, fields));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (i == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw ParseError(where(options.source, line_no) + ": expected " + std::to_string(cols) +
                           " fields, found " + std::to_string(fields),
                       line_no);
    }
  }
  return DenseMatrix(lines.size(), cols, std::move(values));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buffer.str();
}

MatrixFile load_matrix(const std::filesystem::path& path) {
  ParseOptions options;
  options.source = path.string();
  return {path, parse_matrix(read_text_file(path), options), {}};
}

std::vector<std::string> load_labels(const std::filesystem::path& path,
                                     std::optional<std::size_t> expected) {
  const std::string text = read_text_file(path);
  std::vector<std::string> labels;
  for (std::string_view line : csv::split_lines(text)) labels.emplace_back(line);
  if (expected && labels.size() != *expected) {
    throw DimensionError(path.string() + ": " + std::to_string(labels.size()) +
                         " labels for " + std::to_string(*expected) + " columns");
  }
  return labels;
}

SimilarityMatrix load_similarity(const std::filesystem::path& path, double tolerance) {
  ParseOptions options;
  options.nonnegative = false;
  options.source = path.string();
  return validate_similarity(parse_matrix(read_text_file(path), options), tolerance);
}

DisparityMatrix load_disparity(const std::filesystem::path& path, double tolerance) {
  ParseOptions options;
  options.nonnegative = false;
  options.source = path.string();
  return validate_disparity(parse_matrix(read_text_file(path), options), tolerance);
}

std::string format_matrix(const DenseMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out.push_back(',');
      out += csv::format_real(m(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_output(const OutputTable& table) {
  if (table.empty()) throw Error(ErrorKind::validation, "no columns analyzed");
  if (!table.labels.empty() && table.labels.size() != table.records.size()) {
    throw DimensionError("output table has " + std::to_string(table.records.size()) +
                         " records but " + std::to_string(table.labels.size()) + " labels");
  }
  std::string out(kOutputHeader);
  out.push_back('\n');
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    const IndicatorRecord& r = table.records[i];
    out += std::to_string(r.column_index);
    out.push_back(',');
    if (!table.labels.empty()) out += csv::quote(table.labels[i]);
    for (double x : {r.rao_stirling, r.div, r.gini, r.gini_simpson, r.shannon, r.h_max,
                     r.variety_relative}) {
      out.push_back(',');
      out += csv::format_real(x);
    }
    out += ',' + std::to_string(r.n_total) + ',' + std::to_string(r.n_present) + ',';
    if (r.coeff_variation) out += csv::format_real(*r.coeff_variation);
    out.push_back('\n');
  }
  return out;
}

OutputTable parse_output(std::string_view text) {
  const std::vector<std::string_view> lines = content_lines(text, "table");
  if (lines.front() != kOutputHeader) {
    throw ParseError("table: line 1: unexpected header (expected '" + std::string(kOutputHeader) +
                         "')",
                     1);
  }
  OutputTable table;
  bool any_label = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::vector<std::string> f = csv::split_fields(lines[i], line_no);
    if (f.size() != 12) {
      throw ParseError(where("table", line_no) + ": expected 12 fields, found " +
                           std::to_string(f.size()),
                       line_no);
    }
    ParseOptions real;
    real.source = "table";
    IndicatorRecord r;
    r.column_index = parse_count(f[0], line_no, 1);
    r.rao_stirling = parse_real(f[2], real, line_no, 3);
    r.div = parse_real(f[3], real, line_no, 4);
    r.gini = parse_real(f[4], real, line_no, 5);
    r.gini_simpson = parse_real(f[5], real, line_no, 6);
    r.shannon = parse_real(f[6], real, line_no, 7);
    r.h_max = parse_real(f[7], real, line_no, 8);
    r.variety_relative = parse_real(f[8], real, line_no, 9);
    r.n_total = parse_count(f[9], line_no, 10);
    r.n_present = parse_count(f[10], line_no, 11);
    if (!trim(f[11]).empty()) r.coeff_variation = parse_real(f[11], real, line_no, 12);
    any_label = any_label || !f[1].empty();
    table.records.push_back(r);
    table.labels.push_back(f[1]);
  }
  if (!any_label) table.labels.clear();
  return table;
}

OutputTable load_output(const std::filesystem::path& path) {
  return parse_output(read_text_file(path));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("error while writing '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

void write_output(const OutputTable& table, const std::filesystem::path& path) {
  write_file_atomic(path, format_output(table));
}

}  // namespace diverse
