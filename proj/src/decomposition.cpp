#include "pathlayout/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "pathlayout/error.hpp"

namespace pathlayout {

namespace {

// Longer paths first, then the smaller first vertex.
void sort_initial_order(std::vector<std::vector<VertexId>>& paths) {
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

constexpr std::int32_t kUnreached = std::numeric_limits<std::int32_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const Dag& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.vertex_count())),
        right_of_(n_, -1),
        left_of_(n_, -1),
        dist_(n_, kUnreached),
        next_edge_(n_, 0) {}

  Matching run() {
    std::int32_t size = 0;
    while (bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (VertexId u = 0; u < static_cast<VertexId>(n_); ++u) {
        if (right_of_[static_cast<std::size_t>(u)] < 0 && augment(u)) ++size;
      }
    }
    return Matching{std::move(right_of_), std::move(left_of_), size};
  }

 private:
  // Layers free left vertices at distance 0; true when some free right
  // vertex is reachable along alternating paths.
  bool bfs() {
    std::vector<VertexId> queue;
    queue.reserve(n_);
    for (VertexId u = 0; u < static_cast<VertexId>(n_); ++u) {
      if (right_of_[static_cast<std::size_t>(u)] < 0) {
        dist_[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
      } else {
        dist_[static_cast<std::size_t>(u)] = kUnreached;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (EdgeId e : g_.out_edges(u)) {
        VertexId w = left_of_[static_cast<std::size_t>(g_.edge(e).target)];
        if (w < 0) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kUnreached) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  // Iterative DFS along the BFS layering; flips the path when it ends at a
  // free right vertex.
  bool augment(VertexId root) {
    struct Frame {
      VertexId left;
      VertexId via_right;  // right vertex used to reach `left`, -1 for the root
    };
    std::vector<Frame> stack{{root, -1}};
    while (!stack.empty()) {
      VertexId u = stack.back().left;
      auto out = g_.out_edges(u);
      auto& cursor = next_edge_[static_cast<std::size_t>(u)];
      bool advanced = false;
      while (cursor < static_cast<std::int32_t>(out.size())) {
        VertexId v = g_.edge(out[static_cast<std::size_t>(cursor)]).target;
        ++cursor;
        VertexId w = left_of_[static_cast<std::size_t>(v)];
        if (w < 0) {
          // Free right vertex: flip matched/unmatched along the stack.
          VertexId right = v;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            VertexId left = it->left;
            right_of_[static_cast<std::size_t>(left)] = right;
            left_of_[static_cast<std::size_t>(right)] = left;
            right = it->via_right;
          }
          return true;
        }
        if (dist_[static_cast<std::size_t>(w)] == dist_[static_cast<std::size_t>(u)] + 1) {
          stack.push_back({w, v});
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist_[static_cast<std::size_t>(u)] = kUnreached;
        stack.pop_back();
      }
    }
    return false;
  }

  const Dag& g_;
  std::size_t n_;
  std::vector<VertexId> right_of_;
  std::vector<VertexId> left_of_;
  std::vector<std::int32_t> dist_;
  std::vector<std::int32_t> next_edge_;
};

}  // namespace

PathDecomposition::PathDecomposition(const Dag& g, std::vector<std::vector<VertexId>> paths)
    : paths_(std::move(paths)), slots_(static_cast<std::size_t>(g.vertex_count())) {
  for (std::size_t p = 0; p < paths_.size(); ++p) {
    const auto& path = paths_[p];
    if (path.empty()) throw Error(ErrorCode::kEmptyPath, {std::to_string(p)});
    for (std::size_t i = 0; i < path.size(); ++i) {
      VertexId v = path[i];
      if (v < 0 || v >= g.vertex_count()) {
        throw Error(ErrorCode::kUnknownVertex, {std::to_string(v)});
      }
      auto& slot = slots_[static_cast<std::size_t>(v)];
      if (slot.path >= 0) throw Error(ErrorCode::kVertexRepeated, {g.label(v)});
      slot = {static_cast<std::int32_t>(p), static_cast<std::int32_t>(i)};
      if (i > 0 && g.find_edge(path[i - 1], v) < 0) {
        throw Error(ErrorCode::kNonEdgeStep, {g.label(path[i - 1]), g.label(v)});
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (slots_[static_cast<std::size_t>(v)].path < 0) {
      throw Error(ErrorCode::kVertexMissing, {g.label(v)});
    }
  }
}

PathDecomposition PathDecomposition::reordered(std::span<const std::int32_t> order) const {
  if (order.size() != paths_.size()) {
    throw Error(ErrorCode::kInvalidArgument, {std::to_string(order.size())}, "order is not a permutation");
  }
  PathDecomposition out;
  out.paths_.reserve(paths_.size());
  std::vector<char> used(paths_.size(), 0);
  for (std::int32_t p : order) {
    if (p < 0 || static_cast<std::size_t>(p) >= paths_.size() || used[static_cast<std::size_t>(p)]) {
      throw Error(ErrorCode::kInvalidArgument, {std::to_string(p)}, "order is not a permutation");
    }
    used[static_cast<std::size_t>(p)] = 1;
    out.paths_.push_back(paths_[static_cast<std::size_t>(p)]);
  }
  out.slots_ = slots_;
  for (std::size_t p = 0; p < out.paths_.size(); ++p) {
    for (VertexId v : out.paths_[p]) out.slots_[static_cast<std::size_t>(v)].path = static_cast<std::int32_t>(p);
  }
  return out;
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kPath: return "path";
    case EdgeClass::kCross: return "cross";
    case EdgeClass::kPathTransitive: return "transitive";
  }
  return "unknown";
}

std::array<std::int64_t, 3> EdgeClassification::counts() const {
  std::array<std::int64_t, 3> out{0, 0, 0};
  for (EdgeClass c : class_of) ++out[static_cast<std::size_t>(c)];
  return out;
}

Matching maximum_matching(const Dag& g) { return HopcroftKarp(g).run(); }

PathDecomposition min_path_cover(const Dag& g) {
  Matching matching = maximum_matching(g);
  std::vector<std::vector<VertexId>> paths;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (matching.left_of[static_cast<std::size_t>(v)] >= 0) continue;
    auto& path = paths.emplace_back();
    for (VertexId u = v; u >= 0; u = matching.right_of[static_cast<std::size_t>(u)]) path.push_back(u);
  }
  sort_initial_order(paths);
  return PathDecomposition(g, std::move(paths));
}

PathDecomposition greedy_path_cover(const Dag& g, const TopoOrder& topo) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> assigned(n, 0);
  std::vector<std::int32_t> dist(n);
  std::vector<VertexId> pred(n);
  std::vector<std::vector<VertexId>> paths;
  std::size_t remaining = n;
  while (remaining > 0) {
    VertexId best = -1;
    for (VertexId v : topo.order) {
      auto vi = static_cast<std::size_t>(v);
      if (assigned[vi]) continue;
      dist[vi] = 0;
      pred[vi] = -1;
      // In-edges are sorted by source, so the first maximiser is the smallest id.
      for (EdgeId e : g.in_edges(v)) {
        VertexId w = g.edge(e).source;
        if (assigned[static_cast<std::size_t>(w)]) continue;
        if (dist[static_cast<std::size_t>(w)] + 1 > dist[vi]) {
          dist[vi] = dist[static_cast<std::size_t>(w)] + 1;
          pred[vi] = w;
        }
      }
      if (best < 0 || dist[vi] > dist[static_cast<std::size_t>(best)] ||
          (dist[vi] == dist[static_cast<std::size_t>(best)] && v < best)) {
        best = v;
      }
    }
    auto& path = paths.emplace_back();
    for (VertexId v = best; v >= 0; v = pred[static_cast<std::size_t>(v)]) {
      path.push_back(v);
      assigned[static_cast<std::size_t>(v)] = 1;
      --remaining;
    }
    std::reverse(path.begin(), path.end());
  }
  sort_initial_order(paths);
  return PathDecomposition(g, std::move(paths));
}

PathDecomposition from_user_paths(const Dag& g, const std::vector<std::vector<std::string>>& paths) {
  std::unordered_map<std::string, VertexId> ids;
  ids.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) ids.emplace(g.label(v), v);
  std::vector<std::vector<VertexId>> resolved;
  resolved.reserve(paths.size());
  for (const auto& path : paths) {
    auto& out = resolved.emplace_back();
    for (const auto& token : path) {
      auto it = ids.find(token);
      if (it == ids.end()) throw Error(ErrorCode::kUnknownVertex, {token});
      out.push_back(it->second);
    }
  }
  return PathDecomposition(g, std::move(resolved));
}

EdgeClassification classify_edges(const Dag& g, const PathDecomposition& d) {
  EdgeClassification cls;
  cls.class_of.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const PathSlot& a = d.slot(e.source);
    const PathSlot& b = d.slot(e.target);
    if (a.path != b.path) {
      cls.class_of.push_back(EdgeClass::kCross);
    } else if (b.position == a.position + 1) {
      cls.class_of.push_back(EdgeClass::kPath);
    } else {
      cls.class_of.push_back(EdgeClass::kPathTransitive);
    }
  }
  return cls;
}

}  // namespace pathlayout
