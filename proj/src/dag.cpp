#include "pathlayout/dag.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "pathlayout/error.hpp"

namespace pathlayout {

namespace {

// Fills CSR offsets/ids for the given key (source or target), each bucket
// sorted by the opposite endpoint.
void build_adjacency(std::int32_t n, const std::vector<Edge>& edges, bool by_source,
                     std::vector<std::int32_t>& offsets, std::vector<EdgeId>& ids) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) ++offsets[static_cast<std::size_t>(by_source ? e.source : e.target) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  ids.assign(edges.size(), 0);
  std::vector<std::int32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges.size()); ++id) {
    const Edge& e = edges[static_cast<std::size_t>(id)];
    ids[static_cast<std::size_t>(cursor[static_cast<std::size_t>(by_source ? e.source : e.target)]++)] = id;
  }
  for (std::int32_t v = 0; v < n; ++v) {
    auto first = ids.begin() + offsets[static_cast<std::size_t>(v)];
    auto last = ids.begin() + offsets[static_cast<std::size_t>(v) + 1];
    std::sort(first, last, [&](EdgeId a, EdgeId b) {
      const Edge& ea = edges[static_cast<std::size_t>(a)];
      const Edge& eb = edges[static_cast<std::size_t>(b)];
      return by_source ? ea.target < eb.target : ea.source < eb.source;
    });
  }
}

// Returns the vertices of one cycle among vertices left over by Kahn's
// algorithm, in edge direction, rotated to start at the smallest id.
std::vector<VertexId> find_cycle(const std::vector<Edge>& edges,
                                 const std::vector<std::int32_t>& remaining_in) {
  const std::size_t n = remaining_in.size();
  // Predecessor lists restricted to leftover vertices.
  std::vector<std::vector<VertexId>> preds(n);
  for (const Edge& e : edges) {
    if (remaining_in[static_cast<std::size_t>(e.source)] > 0 &&
        remaining_in[static_cast<std::size_t>(e.target)] > 0) {
      preds[static_cast<std::size_t>(e.target)].push_back(e.source);
    }
  }
  VertexId start = -1;
  for (std::size_t v = 0; v < n; ++v) {
    if (remaining_in[v] > 0) {
      start = static_cast<VertexId>(v);
      break;
    }
  }
  std::vector<std::int32_t> seen_at(n, -1);
  std::vector<VertexId> walk;
  VertexId v = start;
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(walk.size());
    walk.push_back(v);
    auto& p = preds[static_cast<std::size_t>(v)];
    v = *std::min_element(p.begin(), p.end());
  }
  std::vector<VertexId> cycle(walk.begin() + seen_at[static_cast<std::size_t>(v)], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

Dag::Dag(std::int32_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, {std::to_string(vertex_count_)}, "negative vertex count");
  }
  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(vertex_count_));
    for (std::int32_t v = 0; v < vertex_count_; ++v) labels_.push_back(std::to_string(v));
  } else if (static_cast<std::int32_t>(labels_.size()) != vertex_count_) {
    throw Error(ErrorCode::kInvalidArgument, {std::to_string(labels_.size())},
                "label count does not match vertex count");
  }
  for (const Edge& e : edges) {
    if (e.source < 0 || e.source >= vertex_count_ || e.target < 0 || e.target >= vertex_count_) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  {std::to_string(e.source), std::to_string(e.target)});
    }
    if (e.source == e.target) {
      throw Error(ErrorCode::kSelfLoop, {labels_[static_cast<std::size_t>(e.source)]});
    }
  }

  // Drop duplicates, keeping first occurrences in input order.
  std::vector<std::size_t> idx(edges.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::vector<char> keep(edges.size(), 1);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (edges[idx[i]] == edges[idx[i - 1]]) {
      keep[idx[i]] = 0;
      ++collapsed_duplicates_;
    }
  }
  edges_.reserve(edges.size() - static_cast<std::size_t>(collapsed_duplicates_));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (keep[i]) edges_.push_back(edges[i]);
  }

  build_adjacency(vertex_count_, edges_, true, out_offsets_, out_ids_);
  build_adjacency(vertex_count_, edges_, false, in_offsets_, in_ids_);

  // Acyclicity: Kahn's algorithm must consume every vertex.
  std::vector<std::int32_t> remaining(static_cast<std::size_t>(vertex_count_));
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    remaining[static_cast<std::size_t>(v)] = in_degree(v);
    if (remaining[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
  }
  std::int32_t consumed = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    ++consumed;
    for (EdgeId e : out_edges(u)) {
      VertexId w = edges_[static_cast<std::size_t>(e)].target;
      if (--remaining[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
  }
  if (consumed != vertex_count_) {
    std::vector<std::string> names;
    for (VertexId v : find_cycle(edges_, remaining)) {
      names.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    throw Error(ErrorCode::kCycleDetected, std::move(names));
  }
}

std::span<const EdgeId> Dag::out_edges(VertexId v) const {
  auto i = static_cast<std::size_t>(v);
  return std::span<const EdgeId>(out_ids_).subspan(
      static_cast<std::size_t>(out_offsets_[i]),
      static_cast<std::size_t>(out_offsets_[i + 1] - out_offsets_[i]));
}

std::span<const EdgeId> Dag::in_edges(VertexId v) const {
  auto i = static_cast<std::size_t>(v);
  return std::span<const EdgeId>(in_ids_).subspan(
      static_cast<std::size_t>(in_offsets_[i]),
      static_cast<std::size_t>(in_offsets_[i + 1] - in_offsets_[i]));
}

EdgeId Dag::find_edge(VertexId u, VertexId v) const {
  auto out = out_edges(u);
  auto it = std::lower_bound(out.begin(), out.end(), v, [&](EdgeId e, VertexId target) {
    return edges_[static_cast<std::size_t>(e)].target < target;
  });
  if (it != out.end() && edges_[static_cast<std::size_t>(*it)].target == v) return *it;
  return -1;
}

Dag build_dag(std::span<const std::pair<std::string, std::string>> edge_pairs,
              std::span<const std::string> declared_vertices) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };
  for (const auto& token : declared_vertices) intern(token);
  std::vector<Edge> edges;
  edges.reserve(edge_pairs.size());
  for (const auto& [from, to] : edge_pairs) {
    VertexId s = intern(from);
    VertexId t = intern(to);
    edges.push_back({s, t});
  }
  auto n = static_cast<std::int32_t>(labels.size());
  return Dag(n, std::move(edges), std::move(labels));
}

TopoOrder topological_sort(const Dag& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  TopoOrder topo;
  topo.rank.assign(n, -1);
  topo.order.reserve(n);
  std::vector<std::int32_t> remaining(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    remaining[static_cast<std::size_t>(v)] = g.in_degree(v);
    if (remaining[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    VertexId u = ready.top();
    ready.pop();
    topo.rank[static_cast<std::size_t>(u)] = static_cast<std::int32_t>(topo.order.size());
    topo.order.push_back(u);
    for (EdgeId e : g.out_edges(u)) {
      VertexId w = g.edge(e).target;
      if (--remaining[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  return topo;
}

Layering longest_path_layering(const Dag& g) {
  Layering layering;
  layering.level.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : topological_sort(g).order) {
    std::int32_t level = 0;
    for (EdgeId e : g.in_edges(v)) {
      level = std::max(level, layering.level[static_cast<std::size_t>(g.edge(e).source)] + 1);
    }
    layering.level[static_cast<std::size_t>(v)] = level;
    layering.longest = std::max(layering.longest, level);
  }
  return layering;
}

}  // namespace pathlayout
