#pragma once

#include <cstdint>

#include "pathlayout/dag.hpp"

namespace pathlayout {

struct GeneratorConfig {
  std::int32_t n = 0;
  double avg_degree = 0.0;  // 2m / n
  std::uint64_t seed = 0;
};

// round(n * avg_degree / 2)
std::int64_t target_edge_count(const GeneratorConfig& cfg);

// Random DAG with a hidden topological order: a uniform permutation of the
// vertices, then m distinct forward pairs sampled uniformly without
// replacement. Edges come out sorted by (source, target). The random stream
// is mt19937_64 with explicit bounded sampling, so the output depends only
// on the seed. Throws Error(kInfeasibleDegree) when m exceeds n(n-1)/2.
Dag generate_dag(const GeneratorConfig& cfg);

}  // namespace pathlayout
