#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathlayout/dag.hpp"
#include "pathlayout/decomposition.hpp"

namespace pathlayout {

struct Point {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class BundleDirection : std::uint8_t { kIncoming, kOutgoing };

// Transitive edges of one path that share `anchor` as head (incoming) or
// tail (outgoing), drawn as a single vertical segment from row `start` to
// row `finish` with a horizontal connector to the spine at every row in
// `connector_rows`.
struct Interval {
  std::int32_t path_index = 0;
  VertexId anchor = 0;
  BundleDirection direction = BundleDirection::kOutgoing;
  std::vector<EdgeId> members;  // ascending
  std::int32_t start = 0;
  std::int32_t finish = 0;
  std::vector<std::int32_t> connector_rows;  // ascending, distinct

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct PlacedInterval {
  Interval interval;
  std::int32_t x = 0;

  friend bool operator==(const PlacedInterval&, const PlacedInterval&) = default;
};

// Grid drawing of a Dag over a path decomposition. Rows grow upward and every
// edge points to a strictly larger row.
struct GridLayout {
  std::vector<std::int32_t> x;            // per vertex
  std::vector<std::int32_t> y;            // per vertex
  std::vector<std::int32_t> path_column;  // spine column per path
  std::vector<std::int32_t> bend_column;  // column between path i and i+1
  std::vector<EdgeClass> edge_class;      // per edge
  // Per edge polyline from source to target; empty when the edge is drawn by
  // an interval (or not yet routed).
  std::vector<std::vector<Point>> routes;
  std::vector<PlacedInterval> intervals;
  // Interval columns per path, ordered from the spine outward.
  std::vector<std::vector<std::int32_t>> interval_columns;

  Point position(VertexId v) const {
    return {x[static_cast<std::size_t>(v)], y[static_cast<std::size_t>(v)]};
  }
  std::int32_t path_count() const { return static_cast<std::int32_t>(path_column.size()); }

  friend bool operator==(const GridLayout&, const GridLayout&) = default;
};

// Path i on column 2i, the bend column 2i-1 to its left, y = topological rank.
GridLayout base_layout(const Dag& g, const PathDecomposition& d, const TopoOrder& topo);

// Longest-path compaction: visiting vertices by ascending current y,
// y(v) = 0 for sources and 1 + max y over all predecessors otherwise.
// Linear in n + m. Throws Error(kInvalidLayout) when some edge does not point
// upward in the input.
GridLayout compact(const Dag& g, const GridLayout& layout);

// Path edges become straight spine segments. A cross edge (u, v) is straight
// when it spans one row, otherwise it bends once at (b, y(v) - 1) where b is
// the bend column beside v's spine on the side facing u. Transitive edges are
// left to the bundling stage.
GridLayout route_cross_edges(const Dag& g, const PathDecomposition& d,
                             const EdgeClassification& cls, const GridLayout& layout);

// Copy of `layout` without its interval layer; vertex positions are kept.
GridLayout without_transitive(const GridLayout& layout);

struct LayoutDiagnostics {
  std::vector<std::string> violations;  // broken structural invariants
  std::vector<std::string> warnings;    // segments passing through vertices
};

LayoutDiagnostics validate_layout(const Dag& g, const PathDecomposition& d, const GridLayout& layout);

}  // namespace pathlayout
