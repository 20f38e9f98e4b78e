#pragma once

#include <string>

#include "pathlayout/dag.hpp"
#include "pathlayout/layout.hpp"

namespace pathlayout {

struct SvgOptions {
  double scale = 40.0;   // pixels per grid unit
  double margin = 30.0;  // pixels around the grid
  std::string path_color = "#222222";
  std::string cross_color = "#c0392b";
  std::string transitive_color = "#1f5fbf";
  std::string vertex_color = "#ffffff";
  bool show_transitive = true;
  bool labels = true;
};

// Larger y is drawn higher. Canvas size depends on the full layout only, so
// toggling the interval layer leaves every vertex where it was.
std::string render_svg(const Dag& g, const GridLayout& layout, const SvgOptions& options = {});

}  // namespace pathlayout
