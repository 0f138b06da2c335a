#include "diverse/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <vector>

#include "diverse/analysis.hpp"
#include "diverse/dataio.hpp"
#include "diverse/disparity.hpp"
#include "diverse/errors.hpp"
#include "diverse/plot.hpp"

namespace diverse::cli {

namespace {

struct RunConfig {
  std::string matrix;
  std::string sim;
  std::string labels;
  std::string occurrence;
  std::string table;
  std::string indicators;
  std::string out;
  bool input_is_disparity = false;
  double tolerance = kDefaultSymmetryTolerance;
};

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    std::string item = list.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty entry in indicator list '" + list + "'");
    out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

int cmd_compute(const RunConfig& config, std::ostream& err) {
  MatrixFile matrix = load_matrix(config.matrix);
  if (!config.labels.empty()) matrix.labels = load_labels(config.labels, matrix.values.cols());
  const DisparityMatrix disparity = config.input_is_disparity
                                        ? load_disparity(config.sim, config.tolerance)
                                        : to_disparity(load_similarity(config.sim, config.tolerance));
  const OutputTable table = batch_indicators(matrix, disparity);
  write_output(table, config.out);
  err << "diverse compute: analyzed " << table.size() << " columns over " << disparity.size()
      << " categories\n";
  return 0;
}

int cmd_cosine(const RunConfig& config, std::ostream& err) {
  const OccurrenceMatrix occurrences(load_matrix(config.occurrence).values);
  const SimilarityMatrix similarity = cosine_similarity(occurrences);
  write_file_atomic(config.out, format_matrix(similarity.matrix()));
  err << "diverse cosine: " << similarity.size() << "x" << similarity.size()
      << " similarity matrix from " << occurrences.rows() << " rows\n";
  return 0;
}

int cmd_correlate(const RunConfig& config, std::ostream& err) {
  const std::vector<std::string> indicators = config.indicators.empty()
                                                  ? default_correlation_indicators()
                                                  : split_list(config.indicators);
  // Reject unknown names before touching the input.
  for (const std::string& name : indicators) indicator_column(OutputTable{}, name);
  const OutputTable table = load_output(config.table);
  const CorrelationTable correlations = correlation_table(table, indicators);
  write_file_atomic(config.out, format_correlation(correlations));
  err << "diverse correlate: " << correlations.size() << "x" << correlations.size()
      << " table over " << correlations.n << " portfolios\n";
  return 0;
}

int cmd_plot(const RunConfig& config, std::ostream& err) {
  const OutputTable table = load_output(config.table);
  std::vector<std::string> labels;
  if (!config.labels.empty()) labels = load_labels(config.labels, table.size());
  write_file_atomic(config.out, render_range_plot(table, labels));
  err << "diverse plot: " << table.size() << " portfolios\n";
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diversity indicators: variety, balance, disparity, DIV and Rao-Stirling",
               "diverse"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* compute = app.add_subcommand("compute", "Compute indicators for each matrix column");
  compute->add_option("--matrix", config.matrix, "Headerless occurrence matrix (categories x units)")
      ->required();
  compute->add_option("--sim", config.sim, "Headerless N x N similarity (or disparity) matrix")
      ->required();
  compute->add_flag("--disparity", config.input_is_disparity,
                    "Treat --sim as a disparity matrix (zero diagonal)");
  compute->add_option("--labels", config.labels, "One label per matrix column");
  compute->add_option("--tolerance", config.tolerance, "Symmetry tolerance")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--out", config.out, "Output CSV")->required();

  CLI::App* cosine = app.add_subcommand("cosine", "Cosine similarity between matrix columns");
  cosine->add_option("--occurrence", config.occurrence, "Headerless documents x categories matrix")
      ->required();
  cosine->add_option("--out", config.out, "Output similarity CSV")->required();

  CLI::App* correlate =
      app.add_subcommand("correlate", "Pearson (lower) / Spearman (upper) correlation table");
  correlate->add_option("--table", config.table, "Indicator table written by compute")
      ->required();
  correlate->add_option("--indicators", config.indicators, "Comma-separated indicator names");
  correlate->add_option("--out", config.out, "Output CSV")->required();

  CLI::App* plot = app.add_subcommand("plot", "SVG range chart of Rao-Stirling and DIV");
  plot->add_option("--table", config.table, "Indicator table written by compute")->required();
  plot->add_option("--labels", config.labels, "One label per table row");
  plot->add_option("--out", config.out, "Output SVG")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::usage);
  }

  try {
    if (compute->parsed()) return cmd_compute(config, err);
    if (cosine->parsed()) return cmd_cosine(config, err);
    if (correlate->parsed()) return cmd_correlate(config, err);
    return cmd_plot(config, err);
  } catch (const Error& e) {
    err << "diverse: error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "diverse: error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::validation);
  }
}

}  // namespace diverse::cli
