#pragma once
// Dot/range chart comparing Rao-Stirling diversity with DIV per portfolio.

#include <span>
#include <string>

#include "diverse/dataio.hpp"

namespace diverse {

struct SeriesRange {
  double min = 0.0;
  double max = 0.0;
  double spread() const noexcept { return max - min; }
};

SeriesRange rao_stirling_range(const OutputTable& table);
SeriesRange div_range(const OutputTable& table);

// Self-contained SVG, one row per record, x axis fixed to [0, 1]. Each row
// carries two elements of class "mark": a circle (Rao-Stirling) and a square
// (DIV). Row labels come from `labels` if given, else the table's labels,
// else "column <i>". Output depends only on the inputs.
std::string render_range_plot(const OutputTable& table, std::span<const std::string> labels = {});

}  // namespace diverse
