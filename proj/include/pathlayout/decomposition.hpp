#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathlayout/dag.hpp"

namespace pathlayout {

struct PathSlot {
  std::int32_t path = -1;
  std::int32_t position = -1;
};

// Vertex-disjoint paths covering every vertex of a Dag; consecutive vertices
// of a path are joined by an edge. Path order is the left-to-right drawing
// order.
class PathDecomposition {
 public:
  PathDecomposition() = default;
  // Validates against g; throws Error on uncovered, repeated or unknown
  // vertices and on steps that are not edges of g.
  PathDecomposition(const Dag& g, std::vector<std::vector<VertexId>> paths);

  std::int32_t path_count() const { return static_cast<std::int32_t>(paths_.size()); }
  const std::vector<std::vector<VertexId>>& paths() const { return paths_; }
  std::span<const VertexId> path(std::int32_t i) const { return paths_[static_cast<std::size_t>(i)]; }
  const PathSlot& slot(VertexId v) const { return slots_[static_cast<std::size_t>(v)]; }

  // Path `order[i]` becomes path i.
  PathDecomposition reordered(std::span<const std::int32_t> order) const;

 private:
  std::vector<std::vector<VertexId>> paths_;
  std::vector<PathSlot> slots_;
};

enum class EdgeClass : std::uint8_t { kPath, kCross, kPathTransitive };

std::string_view to_string(EdgeClass c);

struct EdgeClassification {
  std::vector<EdgeClass> class_of;  // indexed by EdgeId

  // {path, cross, transitive}
  std::array<std::int64_t, 3> counts() const;
};

// Maximum bipartite matching between a left and a right copy of V, one
// bipartite edge per DAG edge (Hopcroft-Karp, neighbours in ascending id).
struct Matching {
  std::vector<VertexId> right_of;  // right_of[u] = v when (u, v) is matched, else -1
  std::vector<VertexId> left_of;   // left_of[v] = u when (u, v) is matched, else -1
  std::int32_t size = 0;
};

Matching maximum_matching(const Dag& g);

// Minimum-cardinality path cover: k = n - |maximum matching|.
PathDecomposition min_path_cover(const Dag& g);

// Repeatedly peels a longest path among unassigned vertices. O(k (n + m)).
PathDecomposition greedy_path_cover(const Dag& g, const TopoOrder& topo);

// Resolves tokens through the labels of g and validates the result; paths
// keep the given order.
PathDecomposition from_user_paths(const Dag& g, const std::vector<std::vector<std::string>>& paths);

EdgeClassification classify_edges(const Dag& g, const PathDecomposition& d);

}  // namespace pathlayout
