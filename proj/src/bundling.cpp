#include "pathlayout/bundling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>

#include "pathlayout/metrics.hpp"

namespace pathlayout {

namespace {

struct Candidate {
  std::int32_t degree;
  bool outgoing;
  VertexId vertex;

  // Max-heap order: larger degree, then outgoing, then the smaller id.
  friend bool operator<(const Candidate& a, const Candidate& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.outgoing != b.outgoing) return !a.outgoing;
    return a.vertex > b.vertex;
  }
};

}  // namespace

std::vector<Interval> extract_intervals(const Dag& g, const PathDecomposition& d,
                                        const EdgeClassification& cls, const GridLayout& layout) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeId>> in_transitive(n);
  std::vector<std::vector<EdgeId>> out_transitive(n);
  std::vector<std::int32_t> in_deg(n, 0);
  std::vector<std::int32_t> out_deg(n, 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (cls.class_of[static_cast<std::size_t>(id)] != EdgeClass::kPathTransitive) continue;
    const Edge& e = g.edge(id);
    out_transitive[static_cast<std::size_t>(e.source)].push_back(id);
    in_transitive[static_cast<std::size_t>(e.target)].push_back(id);
    ++out_deg[static_cast<std::size_t>(e.source)];
    ++in_deg[static_cast<std::size_t>(e.target)];
  }

  std::priority_queue<Candidate> heap;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    if (out_deg[static_cast<std::size_t>(v)] > 0) heap.push({out_deg[static_cast<std::size_t>(v)], true, v});
    if (in_deg[static_cast<std::size_t>(v)] > 0) heap.push({in_deg[static_cast<std::size_t>(v)], false, v});
  }

  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<Interval> intervals;
  while (!heap.empty()) {
    Candidate top = heap.top();
    heap.pop();
    auto vi = static_cast<std::size_t>(top.vertex);
    std::int32_t current = top.outgoing ? out_deg[vi] : in_deg[vi];
    if (current != top.degree) continue;  // stale entry

    Interval interval;
    interval.path_index = d.slot(top.vertex).path;
    interval.anchor = top.vertex;
    interval.direction = top.outgoing ? BundleDirection::kOutgoing : BundleDirection::kIncoming;
    interval.connector_rows.push_back(layout.y[vi]);
    for (EdgeId id : top.outgoing ? out_transitive[vi] : in_transitive[vi]) {
      if (removed[static_cast<std::size_t>(id)]) continue;
      removed[static_cast<std::size_t>(id)] = 1;
      interval.members.push_back(id);
      const Edge& e = g.edge(id);
      VertexId other = top.outgoing ? e.target : e.source;
      auto oi = static_cast<std::size_t>(other);
      interval.connector_rows.push_back(layout.y[oi]);
      std::int32_t& other_deg = top.outgoing ? in_deg[oi] : out_deg[oi];
      --other_deg;
      if (other_deg > 0) heap.push({other_deg, !top.outgoing, other});
    }
    (top.outgoing ? out_deg[vi] : in_deg[vi]) = 0;

    std::sort(interval.members.begin(), interval.members.end());
    std::sort(interval.connector_rows.begin(), interval.connector_rows.end());
    interval.connector_rows.erase(std::unique(interval.connector_rows.begin(), interval.connector_rows.end()),
                                  interval.connector_rows.end());
    interval.start = interval.connector_rows.front();
    interval.finish = interval.connector_rows.back();
    intervals.push_back(std::move(interval));
  }
  return intervals;
}

bool overlaps(const Interval& a, const Interval& b) {
  return a.start <= b.finish && b.start <= a.finish;
}

ColumnAssignment place_intervals(std::span<const Interval> intervals, ColumnSide side) {
  ColumnAssignment assignment;
  assignment.side = side;
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Interval& ia = intervals[a];
    const Interval& ib = intervals[b];
    return std::tie(ia.start, ia.finish, ia.anchor, ia.direction, a) <
           std::tie(ib.start, ib.finish, ib.anchor, ib.direction, b);
  });

  // Busy columns keyed by the finish row of their last interval; a column is
  // free for an interval starting at s once that finish is below s.
  using Busy = std::pair<std::int32_t, std::size_t>;
  std::priority_queue<Busy, std::vector<Busy>, std::greater<>> busy;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> free_columns;
  for (std::size_t i : order) {
    const Interval& interval = intervals[i];
    while (!busy.empty() && busy.top().first < interval.start) {
      free_columns.push(busy.top().second);
      busy.pop();
    }
    std::size_t column;
    if (free_columns.empty()) {
      column = assignment.columns.size();
      assignment.columns.emplace_back();
    } else {
      column = free_columns.top();
      free_columns.pop();
    }
    assignment.columns[column].push_back(i);
    busy.emplace(interval.finish, column);
  }
  return assignment;
}

std::vector<ColumnAssignment> assign_columns(std::span<const Interval> intervals, std::int32_t path_count) {
  std::vector<std::vector<std::size_t>> by_path(static_cast<std::size_t>(path_count));
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    by_path[static_cast<std::size_t>(intervals[i].path_index)].push_back(i);
  }
  std::vector<ColumnAssignment> out;
  out.reserve(by_path.size());
  for (std::int32_t p = 0; p < path_count; ++p) {
    const auto& ids = by_path[static_cast<std::size_t>(p)];
    std::vector<Interval> local;
    local.reserve(ids.size());
    for (std::size_t i : ids) local.push_back(intervals[i]);
    ColumnSide side = p == path_count - 1 ? ColumnSide::kRight : ColumnSide::kLeft;
    ColumnAssignment assignment = place_intervals(local, side);
    for (auto& column : assignment.columns) {
      for (auto& entry : column) entry = ids[entry];
    }
    out.push_back(std::move(assignment));
  }
  return out;
}

GridLayout splice_columns(const GridLayout& layout, std::span<const Interval> intervals,
                          std::span<const ColumnAssignment> assignments) {
  const std::int32_t k = layout.path_count();
  GridLayout out = layout;
  out.intervals.clear();
  out.interval_columns.assign(static_cast<std::size_t>(k), {});
  if (k == 0) return out;

  // Old columns are 0..2k-2 (spines and bend columns).
  std::vector<std::int32_t> remap(static_cast<std::size_t>(2 * k - 1), 0);
  std::vector<std::int32_t> interval_x(intervals.size(), 0);
  std::int32_t next = 0;
  for (std::int32_t p = 0; p < k; ++p) {
    const ColumnAssignment& a = assignments[static_cast<std::size_t>(p)];
    auto& block = out.interval_columns[static_cast<std::size_t>(p)];
    block.resize(a.columns.size());
    const auto count = static_cast<std::int32_t>(a.columns.size());
    if (a.side == ColumnSide::kLeft) {
      for (std::int32_t c = count - 1; c >= 0; --c) block[static_cast<std::size_t>(c)] = next++;
    }
    remap[static_cast<std::size_t>(layout.path_column[static_cast<std::size_t>(p)])] = next++;
    if (a.side == ColumnSide::kRight) {
      for (std::int32_t c = 0; c < count; ++c) block[static_cast<std::size_t>(c)] = next++;
    }
    if (p + 1 < k) remap[static_cast<std::size_t>(layout.bend_column[static_cast<std::size_t>(p)])] = next++;
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
      for (std::size_t i : a.columns[c]) interval_x[i] = block[c];
    }
  }

  for (auto& x : out.x) x = remap[static_cast<std::size_t>(x)];
  for (auto& c : out.path_column) c = remap[static_cast<std::size_t>(c)];
  for (auto& c : out.bend_column) c = remap[static_cast<std::size_t>(c)];
  for (auto& route : out.routes) {
    for (auto& point : route) point.x = remap[static_cast<std::size_t>(point.x)];
  }
  out.intervals.reserve(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i) out.intervals.push_back({intervals[i], interval_x[i]});
  return out;
}

namespace {

std::vector<DrawnSegment> block_segments(const GridLayout& layout, std::int32_t path) {
  GridLayout block;
  block.x = layout.x;
  block.y = layout.y;
  block.path_column = layout.path_column;
  for (const auto& placed : layout.intervals) {
    if (placed.interval.path_index == path) block.intervals.push_back(placed);
  }
  return drawn_segments(block);
}

}  // namespace

std::int64_t block_crossings(const GridLayout& layout, std::int32_t path) {
  return count_crossings(block_segments(layout, path)).total();
}

GridLayout reorder_interval_columns(const GridLayout& layout) {
  GridLayout out = layout;
  for (std::int32_t p = 0; p < out.path_count(); ++p) {
    auto& block = out.interval_columns[static_cast<std::size_t>(p)];
    if (block.size() < 2) continue;

    // Interval ids per column slot (slot 0 next to the spine).
    std::vector<std::vector<std::size_t>> slots(block.size());
    for (std::size_t i = 0; i < out.intervals.size(); ++i) {
      const auto& placed = out.intervals[i];
      if (placed.interval.path_index != p) continue;
      auto it = std::find(block.begin(), block.end(), placed.x);
      slots[static_cast<std::size_t>(it - block.begin())].push_back(i);
    }

    // Swapping two adjacent slots only changes the crossings between those
    // two slots: connectors of the outer slot pass over the inner slot's
    // segments, everything else keeps its relative position.
    auto cost = [&](std::size_t inner, std::size_t outer) {
      std::int64_t crossings = 0;
      for (std::size_t o : slots[outer]) {
        for (std::int32_t row : out.intervals[o].interval.connector_rows) {
          for (std::size_t i : slots[inner]) {
            const Interval& iv = out.intervals[i].interval;
            if (iv.start <= row && row <= iv.finish) ++crossings;
          }
        }
      }
      return crossings;
    };
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t s = 0; s + 1 < slots.size(); ++s) {
        if (cost(s + 1, s) < cost(s, s + 1)) {
          std::swap(slots[s], slots[s + 1]);
          improved = true;
        }
      }
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      for (std::size_t i : slots[s]) out.intervals[i].x = block[s];
    }
  }
  return out;
}

}  // namespace pathlayout
