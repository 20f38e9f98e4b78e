#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathlayout/dag.hpp"
#include "pathlayout/decomposition.hpp"
#include "pathlayout/layout.hpp"
#include "pathlayout/metrics.hpp"

namespace pathlayout {

// Serialisable snapshot of a finished drawing, keyed by vertex tokens.
struct LayoutDocument {
  struct Vertex {
    std::string token;
    std::int32_t x = 0;
    std::int32_t y = 0;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct DrawnEdge {
    std::string source;
    std::string target;
    EdgeClass edge_class = EdgeClass::kPath;
    std::vector<Point> polyline;  // empty for bundled transitive edges
    friend bool operator==(const DrawnEdge&, const DrawnEdge&) = default;
  };
  struct Bundle {
    std::int32_t path = 0;
    std::int32_t column = 0;
    std::string anchor;
    BundleDirection direction = BundleDirection::kOutgoing;
    std::int32_t start = 0;
    std::int32_t finish = 0;
    std::vector<std::int32_t> connector_rows;
    std::vector<std::int32_t> members;  // edge indices into `edges`
    friend bool operator==(const Bundle&, const Bundle&) = default;
  };

  std::vector<Vertex> vertices;
  std::vector<DrawnEdge> edges;
  std::vector<Bundle> intervals;
  std::vector<std::vector<std::string>> paths;  // left to right
  MetricsReport metrics;

  friend bool operator==(const LayoutDocument&, const LayoutDocument&) = default;
};

LayoutDocument make_document(const Dag& g, const PathDecomposition& d, const GridLayout& layout,
                             const MetricsReport& metrics);

// JSON with a fixed key order; the same document always serialises to the
// same bytes.
std::string serialize(const LayoutDocument& doc);
LayoutDocument parse_layout_document(std::string_view text);

}  // namespace pathlayout
