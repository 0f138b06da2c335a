#include "diverse/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <string_view>

#include "diverse/errors.hpp"

namespace diverse {

namespace {

constexpr double kLeft = 170.0;
constexpr double kAxisWidth = 500.0;
constexpr double kTop = 84.0;
constexpr double kRowHeight = 22.0;
constexpr double kBottom = 48.0;
constexpr double kWidth = kLeft + kAxisWidth + 40.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

double x_of(double value) { return kLeft + std::clamp(value, 0.0, 1.0) * kAxisWidth; }

template <typename Get>
SeriesRange range_of(const OutputTable& table, Get get) {
  if (table.empty()) throw Error(ErrorKind::validation, "no columns analyzed");
  SeriesRange r{get(table.records.front()), get(table.records.front())};
  for (const IndicatorRecord& rec : table.records) {
    r.min = std::min(r.min, get(rec));
    r.max = std::max(r.max, get(rec));
  }
  return r;
}

}  // namespace

SeriesRange rao_stirling_range(const OutputTable& table) {
  return range_of(table, [](const IndicatorRecord& r) { return r.rao_stirling; });
}

SeriesRange div_range(const OutputTable& table) {
  return range_of(table, [](const IndicatorRecord& r) { return r.div; });
}

std::string render_range_plot(const OutputTable& table, std::span<const std::string> labels) {
  const SeriesRange rao = rao_stirling_range(table);
  const SeriesRange dv = div_range(table);
  if (!labels.empty() && labels.size() != table.size()) {
    throw DimensionError(std::to_string(labels.size()) + " labels for " +
                         std::to_string(table.size()) + " portfolios");
  }

  const std::size_t rows = table.size();
  const double height = kTop + static_cast<double>(rows) * kRowHeight + kBottom;
  const double axis_y = kTop + static_cast<double>(rows) * kRowHeight;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";
  svg += "<text class=\"title\" x=\"" + num(kLeft) +
         "\" y=\"22\" font-size=\"14\">Rao-Stirling diversity and DIV per portfolio</text>\n";
  svg += "<text class=\"range-summary\" x=\"" + num(kLeft) + "\" y=\"42\">Rao-Stirling: " +
         num(rao.min) + " to " + num(rao.max) + "; DIV: " + num(dv.min) + " to " + num(dv.max) +
         "</text>\n";

  // Legend
  svg += "<g class=\"legend\">\n";
  svg += "<circle class=\"legend-key\" cx=\"" + num(kLeft + 5.0) +
         "\" cy=\"60\" r=\"5\" fill=\"#1f77b4\"/>\n";
  svg += "<text x=\"" + num(kLeft + 15.0) + "\" y=\"64\">Rao-Stirling</text>\n";
  svg += "<rect class=\"legend-key\" x=\"" + num(kLeft + 120.0) +
         "\" y=\"55\" width=\"10\" height=\"10\" fill=\"#d62728\"/>\n";
  svg += "<text x=\"" + num(kLeft + 135.0) + "\" y=\"64\">DIV</text>\n";
  svg += "</g>\n";

  // Axis
  svg += "<g class=\"axis\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(axis_y) + "\" x2=\"" +
         num(kLeft + kAxisWidth) + "\" y2=\"" + num(axis_y) + "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double v = t / 5.0;
    const double x = x_of(v);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop - 6.0) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(axis_y + 4.0) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(axis_y + 18.0) +
           "\" text-anchor=\"middle\">" + num(v) + "</text>\n";
  }
  svg += "</g>\n";

  for (std::size_t i = 0; i < rows; ++i) {
    const IndicatorRecord& r = table.records[i];
    std::string label;
    if (!labels.empty()) label = labels[i];
    else if (!table.labels.empty()) label = table.labels[i];
    if (label.empty()) label = "column " + std::to_string(r.column_index);

    const double y = kTop + (static_cast<double>(i) + 0.5) * kRowHeight;
    const double xr = x_of(r.rao_stirling);
    const double xd = x_of(r.div);
    svg += "<g class=\"row\" data-column=\"" + std::to_string(r.column_index) + "\">\n";
    svg += "<text class=\"label\" x=\"" + num(kLeft - 10.0) + "\" y=\"" + num(y + 4.0) +
           "\" text-anchor=\"end\">" + xml_escape(label) + "</text>\n";
    svg += "<line class=\"span\" x1=\"" + num(std::min(xr, xd)) + "\" y1=\"" + num(y) +
           "\" x2=\"" + num(std::max(xr, xd)) + "\" y2=\"" + num(y) +
           "\" stroke=\"#999999\"/>\n";
    svg += "<circle class=\"mark rao-stirling\" cx=\"" + num(xr) + "\" cy=\"" + num(y) +
           "\" r=\"5\" fill=\"#1f77b4\"><title>Rao-Stirling " + num(r.rao_stirling) +
           "</title></circle>\n";
    svg += "<rect class=\"mark div\" x=\"" + num(xd - 5.0) + "\" y=\"" + num(y - 5.0) +
           "\" width=\"10\" height=\"10\" fill=\"#d62728\"><title>DIV " + num(r.div) +
           "</title></rect>\n";
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace diverse
