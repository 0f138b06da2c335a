#include "diverse/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "diverse/csv.hpp"
#include "diverse/errors.hpp"
#include "diverse/measures.hpp"

namespace diverse {

namespace {

// Student t quantiles 1 - alpha/2 for df = 1..100.
constexpr std::array<double, 100> kT05 = {
    12.70620474, 4.30265273,  3.182446305, 2.776445105, 2.570581836, 2.446911851, 2.364624252,
    2.306004135, 2.262157163, 2.228138852, 2.20098516,  2.17881283,  2.160368656, 2.144786688,
    2.131449546, 2.119905299, 2.109815578, 2.10092204,  2.093024054, 2.085963447, 2.079613845,
    2.073873068, 2.06865761,  2.063898562, 2.059538553, 2.055529439, 2.051830516, 2.048407142,
    2.045229642, 2.042272456, 2.039513446, 2.036933343, 2.034515297, 2.032244509, 2.030107928,
    2.028094001, 2.026192463, 2.024394164, 2.02269092,  2.02107539,  2.01954097,  2.018081703,
    2.016692199, 2.015367574, 2.014103389, 2.012895599, 2.011740514, 2.010634758, 2.009575237,
    2.008559112, 2.00758377,  2.006646805, 2.005745995, 2.004879288, 2.004044783, 2.003240719,
    2.002465459, 2.001717484, 2.000995378, 2.000297822, 1.999623585, 1.998971517, 1.998340543,
    1.997729654, 1.997137908, 1.996564419, 1.996008354, 1.995468931, 1.994945415, 1.994437112,
    1.993943368, 1.993463567, 1.992997126, 1.992543495, 1.992102154, 1.99167261,  1.991254395,
    1.990847069, 1.99045021,  1.990063421, 1.989686323, 1.989318557, 1.98895978,  1.988609667,
    1.988267907, 1.987934206, 1.987608282, 1.987289865, 1.9869787,   1.986674541, 1.986377154,
    1.986086317, 1.985801814, 1.985523442, 1.985251004, 1.984984312, 1.984723186, 1.984467454,
    1.984216952, 1.983971518,
};

constexpr std::array<double, 100> kT01 = {
    63.65674116, 9.924843201, 5.84090931,  4.604094871, 4.032142984, 3.707428021, 3.499483297,
    3.355387331, 3.249835542, 3.169272673, 3.105806516, 3.054539589, 3.012275839, 2.976842734,
    2.946712883, 2.920781622, 2.89823052,  2.878440473, 2.860934606, 2.84533971,  2.831359558,
    2.818756061, 2.807335684, 2.796939505, 2.787435814, 2.778714533, 2.770682957, 2.763262455,
    2.756385904, 2.749995654, 2.744041919, 2.738481482, 2.733276642, 2.728394367, 2.723805589,
    2.71948463,  2.715408722, 2.711557602, 2.707913184, 2.704459267, 2.701181304, 2.698066186,
    2.695102079, 2.692278266, 2.689585019, 2.687013492, 2.684555618, 2.682204027, 2.679951974,
    2.677793271, 2.675722234, 2.673733631, 2.671822636, 2.669984796, 2.668215988, 2.666512398,
    2.664870482, 2.663286954, 2.661758752, 2.660283029, 2.658857127, 2.657478565, 2.656145025,
    2.654854337, 2.653604469, 2.652393515, 2.651219685, 2.650081299, 2.648976774, 2.647904624,
    2.646863444, 2.645851913, 2.644868782, 2.643912872, 2.642983067, 2.642078313, 2.641197611,
    2.640340015, 2.639504627, 2.638690596, 2.637897113, 2.63712341,  2.636368757, 2.635632458,
    2.634913852, 2.634212309, 2.633527229, 2.632858038, 2.632204191, 2.631565166, 2.630940463,
    2.630329608, 2.629732145, 2.629147638, 2.628575671, 2.628015844, 2.627467774, 2.626931096,
    2.626405457, 2.625890521,
};

constexpr double kZ05 = 1.959963984540054;
constexpr double kZ01 = 2.5758293035489004;

bool is_constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
}

}  // namespace

OutputTable batch_indicators(const DenseMatrix& m, const DisparityMatrix& d) {
  if (m.rows() != d.size()) {
    throw DimensionError("matrix has " + std::to_string(m.rows()) +
                         " rows (categories) but the similarity/disparity matrix is " +
                         std::to_string(d.size()) + "x" + std::to_string(d.size()));
  }
  OutputTable table;
  table.records.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    table.records.push_back(indicator_record(c + 1, PortfolioVector(m.column(c)), d));
  }
  return table;
}

OutputTable batch_indicators(const MatrixFile& m, const DisparityMatrix& d) {
  OutputTable table = batch_indicators(m.values, d);
  table.labels = m.labels;
  return table;
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j; their mean is (i + 1 + j) / 2.
    const double rank = static_cast<double>(i + 1 + j) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DimensionError("correlation inputs differ in length (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) throw DomainError("correlation needs at least 3 observations");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw DomainError("correlation input is not finite");
    }
  }
  if (is_constant(x) || is_constant(y)) throw DomainError("constant series");

  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DimensionError("correlation inputs differ in length (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
  }
  return pearson(average_ranks(x), average_ranks(y));
}

double t_critical(double alpha, std::size_t df) {
  const bool five = alpha == 0.05;
  if (!five && alpha != 0.01) throw DomainError("critical values exist for alpha 0.05 and 0.01");
  if (df == 0) throw DomainError("degrees of freedom must be positive");
  const auto& table = five ? kT05 : kT01;
  if (df <= table.size()) return table[df - 1];
  // Beyond the table, interpolate linearly in 1/df towards the normal quantile.
  const double z = five ? kZ05 : kZ01;
  return z + (table.back() - z) * static_cast<double>(table.size()) / static_cast<double>(df);
}

Significance significance(double r, std::size_t n) {
  if (n < 3) return Significance::none;
  const std::size_t df = n - 2;
  const double r2 = r * r;
  const double t = r2 >= 1.0 ? INFINITY : std::abs(r) * std::sqrt(static_cast<double>(df) / (1.0 - r2));
  if (t > t_critical(0.01, df)) return Significance::p01;
  if (t > t_critical(0.05, df)) return Significance::p05;
  return Significance::none;
}

const std::vector<std::string>& indicator_names() {
  static const std::vector<std::string> names = {
      "rao_stirling", "div",     "gini",    "gini_simpson", "shannon",
      "h_max",        "variety_relative", "n_total", "n_present",    "coeff_variation",
  };
  return names;
}

const std::vector<std::string>& default_correlation_indicators() {
  static const std::vector<std::string> names = {
      "rao_stirling", "div", "gini", "variety_relative", "gini_simpson", "shannon",
  };
  return names;
}

std::vector<std::optional<double>> indicator_column(const OutputTable& table,
                                                    std::string_view name) {
  const auto& names = indicator_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError("unknown indicator '" + std::string(name) + "'");
  }
  std::vector<std::optional<double>> out;
  out.reserve(table.size());
  for (const IndicatorRecord& r : table.records) {
    if (name == "rao_stirling") out.emplace_back(r.rao_stirling);
    else if (name == "div") out.emplace_back(r.div);
    else if (name == "gini") out.emplace_back(r.gini);
    else if (name == "gini_simpson") out.emplace_back(r.gini_simpson);
    else if (name == "shannon") out.emplace_back(r.shannon);
    else if (name == "h_max") out.emplace_back(r.h_max);
    else if (name == "variety_relative") out.emplace_back(r.variety_relative);
    else if (name == "n_total") out.emplace_back(static_cast<double>(r.n_total));
    else if (name == "n_present") out.emplace_back(static_cast<double>(r.n_present));
    else out.push_back(r.coeff_variation);
  }
  return out;
}

CorrelationTable correlation_table(const OutputTable& table,
                                   std::span<const std::string> indicators) {
  if (indicators.empty()) throw UsageError("no indicators selected");
  std::vector<std::vector<std::optional<double>>> columns;
  for (const std::string& name : indicators) columns.push_back(indicator_column(table, name));
  if (table.size() < 3) {
    throw Error(ErrorKind::validation, "need at least 3 portfolios, got " +
                                           std::to_string(table.size()));
  }

  const std::size_t k = indicators.size();
  CorrelationTable out;
  out.indicators.assign(indicators.begin(), indicators.end());
  out.n = table.size();
  out.cells.resize(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      // Pairwise-complete observations.
      std::vector<double> x;
      std::vector<double> y;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (columns[a][i] && columns[b][i]) {
          x.push_back(*columns[a][i]);
          y.push_back(*columns[b][i]);
        }
      }
      if (x.size() < 3 || is_constant(x) || is_constant(y)) continue;
      const double r = pearson(x, y);
      const double rho = spearman(x, y);
      out.cells[b * k + a] = CorrelationCell{r, x.size(), significance(r, x.size())};
      // Rank series can be constant only if the raw series is, checked above.
      out.cells[a * k + b] = CorrelationCell{rho, x.size(), significance(rho, x.size())};
    }
  }
  return out;
}

std::string format_correlation(const CorrelationTable& table) {
  std::string out =
      "# lower triangle: Pearson r; upper triangle: Spearman rho; * p < 0.05, ** p < 0.01 "
      "(two-tailed t test); n = " +
      std::to_string(table.n) + "\n";
  out += "indicator";
  for (const std::string& name : table.indicators) out += "," + csv::quote(name);
  out.push_back('\n');
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += csv::quote(table.indicators[i]);
    for (std::size_t j = 0; j < table.size(); ++j) {
      out.push_back(',');
      if (i == j) continue;
      const std::optional<CorrelationCell>& cell = table.at(i, j);
      if (!cell) {
        out += "NA";
        continue;
      }
      out += csv::format_real(cell->coefficient);
      if (cell->marker == Significance::p01) out += "**";
      else if (cell->marker == Significance::p05) out += "*";
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace diverse
