#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathlayout {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable directed acyclic graph over dense vertex ids 0..n-1.
//
// Construction rejects self-loops, out-of-range endpoints and cycles, and
// collapses duplicate edges (keeping the first occurrence). Edge ids are the
// positions of the surviving edges in input order. Adjacency lists are
// sorted by the opposite endpoint, which every deterministic traversal in
// the library relies on.
class Dag {
 public:
  Dag() = default;
  Dag(std::int32_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::int32_t vertex_count() const { return vertex_count_; }
  std::int32_t edge_count() const { return static_cast<std::int32_t>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Outgoing edge ids of v, ascending by target.
  std::span<const EdgeId> out_edges(VertexId v) const;
  // Incoming edge ids of v, ascending by source.
  std::span<const EdgeId> in_edges(VertexId v) const;

  std::int32_t out_degree(VertexId v) const { return static_cast<std::int32_t>(out_edges(v).size()); }
  std::int32_t in_degree(VertexId v) const { return static_cast<std::int32_t>(in_edges(v).size()); }

  // Edge id of (u, v), or -1. O(log deg(u)).
  EdgeId find_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const std::string> labels() const { return labels_; }

  // Number of duplicate edges dropped during construction.
  std::int32_t collapsed_duplicates() const { return collapsed_duplicates_; }

 private:
  std::int32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::int32_t> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::int32_t> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
  std::int32_t collapsed_duplicates_ = 0;
};

// Builds a Dag from token pairs. Ids follow first appearance of each token,
// first in `declared_vertices` and then in the pairs, so isolated vertices can
// be declared up front.
Dag build_dag(std::span<const std::pair<std::string, std::string>> edge_pairs,
              std::span<const std::string> declared_vertices = {});

struct TopoOrder {
  std::vector<std::int32_t> rank;  // rank[v] = position of v
  std::vector<VertexId> order;     // order[i] = vertex at position i
};

// Kahn's algorithm, smallest available vertex id first.
TopoOrder topological_sort(const Dag& g);

struct Layering {
  std::vector<std::int32_t> level;  // longest path (in edges) ending at v
  std::int32_t longest = 0;         // L, the length of a longest path
};

Layering longest_path_layering(const Dag& g);

}  // namespace pathlayout
