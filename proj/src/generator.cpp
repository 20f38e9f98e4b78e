#include "pathlayout/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "pathlayout/error.hpp"

namespace pathlayout {

namespace {

// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

std::int64_t target_edge_count(const GeneratorConfig& cfg) {
  return std::llround(static_cast<double>(cfg.n) * cfg.avg_degree / 2.0);
}

Dag generate_dag(const GeneratorConfig& cfg) {
  if (cfg.n < 0 || !(cfg.avg_degree >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, {std::to_string(cfg.n), std::to_string(cfg.avg_degree)});
  }
  const auto n = static_cast<std::uint64_t>(cfg.n);
  const std::int64_t m = target_edge_count(cfg);
  const std::uint64_t pairs = n * (n == 0 ? 0 : n - 1) / 2;
  if (m < 0 || static_cast<std::uint64_t>(m) > pairs) {
    throw Error(ErrorCode::kInfeasibleDegree, {std::to_string(cfg.n), std::to_string(cfg.avg_degree)},
                std::to_string(m) + " edges exceed " + std::to_string(pairs) + " possible pairs");
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<VertexId> order(n);
  for (std::uint64_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(i);
  for (std::uint64_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }

  // Floyd's sampling of m distinct indices from [0, pairs).
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::uint64_t j = pairs - static_cast<std::uint64_t>(m); j < pairs; ++j) {
    std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());

  // Row i of the strict upper triangle holds n-1-i pairs (i, j), j > i.
  auto row_start = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  std::vector<Edge> edges;
  edges.reserve(indices.size());
  for (std::uint64_t idx : indices) {
    std::uint64_t lo = 0;
    std::uint64_t hi = n - 1;
    while (hi - lo > 1) {
      std::uint64_t mid = (lo + hi) / 2;
      if (row_start(mid) <= idx) lo = mid; else hi = mid;
    }
    std::uint64_t j = idx - row_start(lo) + lo + 1;
    edges.push_back({order[lo], order[j]});
  }
  std::sort(edges.begin(), edges.end());
  return Dag(cfg.n, std::move(edges));
}

}  // namespace pathlayout
