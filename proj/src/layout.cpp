#include "pathlayout/layout.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pathlayout/error.hpp"
#include "pathlayout/metrics.hpp"

namespace pathlayout {

GridLayout base_layout(const Dag& g, const PathDecomposition& d, const TopoOrder& topo) {
  GridLayout layout;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto k = d.path_count();
  layout.x.assign(n, 0);
  layout.y.assign(topo.rank.begin(), topo.rank.end());
  layout.path_column.resize(static_cast<std::size_t>(k));
  layout.bend_column.resize(static_cast<std::size_t>(std::max(k - 1, 0)));
  for (std::int32_t p = 0; p < k; ++p) {
    layout.path_column[static_cast<std::size_t>(p)] = 2 * p;
    if (p > 0) layout.bend_column[static_cast<std::size_t>(p - 1)] = 2 * p - 1;
    for (VertexId v : d.path(p)) layout.x[static_cast<std::size_t>(v)] = 2 * p;
  }
  layout.interval_columns.resize(static_cast<std::size_t>(k));
  return layout;
}

GridLayout compact(const Dag& g, const GridLayout& layout) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (layout.y[static_cast<std::size_t>(e.source)] >= layout.y[static_cast<std::size_t>(e.target)]) {
      throw Error(ErrorCode::kInvalidLayout, {g.label(e.source), g.label(e.target)},
                  "edge does not point upward");
    }
  }
  GridLayout out = layout;
  if (n == 0) return out;

  // Counting sort by (current y, id).
  auto [lo, hi] = std::minmax_element(layout.y.begin(), layout.y.end());
  const auto base = *lo;
  std::vector<std::size_t> bucket_start(static_cast<std::size_t>(*hi - base) + 2, 0);
  for (std::int32_t y : layout.y) ++bucket_start[static_cast<std::size_t>(y - base) + 1];
  std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());
  std::vector<VertexId> visit(n);
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    visit[bucket_start[static_cast<std::size_t>(layout.y[static_cast<std::size_t>(v)] - base)]++] = v;
  }

  for (VertexId v : visit) {
    std::int32_t y = 0;
    for (EdgeId e : g.in_edges(v)) {
      y = std::max(y, out.y[static_cast<std::size_t>(g.edge(e).source)] + 1);
    }
    out.y[static_cast<std::size_t>(v)] = y;
  }
  // Any routes computed against the old rows are stale.
  out.routes.clear();
  out.intervals.clear();
  return out;
}

GridLayout route_cross_edges(const Dag& g, const PathDecomposition& d,
                             const EdgeClassification& cls, const GridLayout& layout) {
  GridLayout out = layout;
  out.edge_class = cls.class_of;
  out.routes.assign(static_cast<std::size_t>(g.edge_count()), {});
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    Point from = out.position(e.source);
    Point to = out.position(e.target);
    auto& route = out.routes[static_cast<std::size_t>(id)];
    switch (cls.class_of[static_cast<std::size_t>(id)]) {
      case EdgeClass::kPath:
        route = {from, to};
        break;
      case EdgeClass::kCross: {
        if (to.y == from.y + 1) {
          route = {from, to};
          break;
        }
        std::int32_t target_path = d.slot(e.target).path;
        std::int32_t source_path = d.slot(e.source).path;
        // Bend column i sits between paths i and i+1.
        std::int32_t bend = source_path < target_path
                                ? out.bend_column[static_cast<std::size_t>(target_path - 1)]
                                : out.bend_column[static_cast<std::size_t>(target_path)];
        route = {from, Point{bend, to.y - 1}, to};
        break;
      }
      case EdgeClass::kPathTransitive:
        break;
    }
  }
  return out;
}

GridLayout without_transitive(const GridLayout& layout) {
  GridLayout out = layout;
  out.intervals.clear();
  return out;
}

LayoutDiagnostics validate_layout(const Dag& g, const PathDecomposition& d, const GridLayout& layout) {
  LayoutDiagnostics diag;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (layout.x.size() != n || layout.y.size() != n) {
    diag.violations.push_back("coordinate arrays do not match the vertex count");
    return diag;
  }
  for (std::int32_t p = 0; p < d.path_count(); ++p) {
    auto path = d.path(p);
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (layout.x[static_cast<std::size_t>(path[i])] != layout.path_column[static_cast<std::size_t>(p)]) {
        diag.violations.push_back("vertex " + g.label(path[i]) + " is off its path spine");
      }
      if (i > 0 && layout.y[static_cast<std::size_t>(path[i])] <= layout.y[static_cast<std::size_t>(path[i - 1])]) {
        diag.violations.push_back("path " + std::to_string(p) + " does not rise at " + g.label(path[i]));
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (layout.y[static_cast<std::size_t>(e.source)] >= layout.y[static_cast<std::size_t>(e.target)]) {
      diag.violations.push_back("edge " + g.label(e.source) + "->" + g.label(e.target) + " does not point upward");
    }
  }
  std::vector<VertexId> by_position(n);
  std::iota(by_position.begin(), by_position.end(), 0);
  std::sort(by_position.begin(), by_position.end(),
            [&](VertexId a, VertexId b) { return layout.position(a) < layout.position(b); });
  for (std::size_t i = 1; i < n; ++i) {
    if (layout.position(by_position[i]) == layout.position(by_position[i - 1])) {
      diag.violations.push_back("vertices " + g.label(by_position[i - 1]) + " and " +
                                g.label(by_position[i]) + " share a grid point");
    }
  }
  for (const auto& route : layout.routes) {
    for (std::size_t i = 1; i < route.size(); ++i) {
      if (route[i].y <= route[i - 1].y) {
        diag.violations.push_back("route is not y-monotone");
        break;
      }
    }
  }

  // Vertex-through-segment passes. Lattice points on a segment are spaced by
  // gcd(|dx|, |dy|); only those can coincide with a vertex.
  std::unordered_map<std::int64_t, VertexId> at;
  at.reserve(n * 2);
  auto key = [](Point p) { return (static_cast<std::int64_t>(p.x) << 32) ^ static_cast<std::uint32_t>(p.y); };
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) at.emplace(key(layout.position(v)), v);
  for (const DrawnSegment& s : drawn_segments(layout)) {
    std::int32_t dx = s.b.x - s.a.x;
    std::int32_t dy = s.b.y - s.a.y;
    std::int32_t steps = std::gcd(std::abs(dx), std::abs(dy));
    for (std::int32_t t = 1; t < steps; ++t) {
      Point p{s.a.x + dx / steps * t, s.a.y + dy / steps * t};
      auto it = at.find(key(p));
      if (it != at.end()) {
        diag.warnings.push_back("segment (" + std::to_string(s.a.x) + "," + std::to_string(s.a.y) + ")-(" +
                                std::to_string(s.b.x) + "," + std::to_string(s.b.y) +
                                ") passes through vertex " + g.label(it->second));
      }
    }
  }
  return diag;
}

}  // namespace pathlayout
