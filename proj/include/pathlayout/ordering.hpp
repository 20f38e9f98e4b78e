#pragma once

#include <cstdint>
#include <vector>

#include "pathlayout/dag.hpp"
#include "pathlayout/decomposition.hpp"

namespace pathlayout {

struct WeightedPair {
  std::int32_t a = 0;  // a < b
  std::int32_t b = 0;
  std::int64_t weight = 0;

  friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

// Undirected graph on decomposition paths; the weight of {a, b} is the number
// of cross edges between the two paths in either direction. Pairs are
// positive-weight only and sorted by (a, b).
struct PathGraph {
  std::int32_t path_count = 0;
  std::vector<WeightedPair> pairs;
};

// Left-to-right drawing order: order[i] is the path drawn i-th.
using PathOrder = std::vector<std::int32_t>;

PathGraph build_path_graph(const Dag& g, const PathDecomposition& d, const EdgeClassification& cls);

// Kruskal-style greedy placement. Pairs are taken by descending weight (ties
// by (a, b)). Two unplaced paths start a new chain; a single unplaced path is
// appended to the end of its partner's chain nearer to the partner (right end
// on ties); a pair with both paths placed is dropped. Chains are concatenated
// by descending length (ties by smallest member) and unplaced paths follow in
// index order. O(m + k) after the path graph is built.
PathOrder greedy_order(const PathGraph& pg);

PathOrder identity_order(std::int32_t k);

// Exhaustive search for k <= 6: minimises sum of weight * |pos(a) - pos(b)|,
// the number of path columns spanned by cross edges; lexicographically
// smallest order on ties. Throws Error(kInvalidArgument) for larger k.
PathOrder brute_force_order(const PathGraph& pg);

std::int64_t weighted_span(const PathGraph& pg, const PathOrder& order);

}  // namespace pathlayout
