#pragma once

#include <string>
#include <vector>

#include "gcgt/experiment.hpp"

namespace gcgt {

struct PlotImage {
  std::string name;  ///< file stem, e.g. "fat_tree_k=8;hosts=0_d1"
  std::string svg;
};

/// One SVG per (family, params, d) with one curve per method in the order
/// subgraph, walk, random. Error bars span +-1/sqrt(trials). An empty record
/// set yields a single image with empty axes.
std::vector<PlotImage> render_plots(const std::vector<ExperimentRecord>& records);

}  // namespace gcgt
