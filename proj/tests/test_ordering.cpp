#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "pathlayout/error.hpp"
#include "pathlayout/ordering.hpp"

using namespace pathlayout;

namespace {

PathGraph graph_of(std::int32_t k, std::vector<WeightedPair> pairs) { return {k, std::move(pairs)}; }

bool is_permutation_of_k(const PathOrder& order, std::int32_t k) {
  std::vector<std::int32_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int32_t> expected(static_cast<std::size_t>(k));
  std::iota(expected.begin(), expected.end(), 0);
  return sorted == expected;
}

PathGraph random_path_graph(oracle::Rng& rng, std::int32_t k, double density, std::int64_t max_weight) {
  PathGraph pg{k, {}};
  for (std::int32_t a = 0; a < k; ++a) {
    for (std::int32_t b = a + 1; b < k; ++b) {
      if (rng.chance(density)) pg.pairs.push_back({a, b, rng.uniform(1, max_weight)});
    }
  }
  return pg;
}

}  // namespace

TEST_CASE("build_path_graph sums cross edges in both directions") {
  // P0 = [0,1,2,3], P1 = [4,5,6,7]; three edges P0 -> P1 and one back.
  Dag g(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {0, 5}, {1, 6}, {2, 7}, {4, 3}});
  PathDecomposition d(g, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  PathGraph pg = build_path_graph(g, d, classify_edges(g, d));
  CHECK(pg.path_count == 2);
  CHECK(pg.pairs == std::vector<WeightedPair>{{0, 1, 4}});
}

TEST_CASE("no cross edges gives an empty path graph") {
  Dag g(3, {{0, 1}, {1, 2}, {0, 2}});
  PathDecomposition d = min_path_cover(g);
  CHECK(build_path_graph(g, d, classify_edges(g, d)).pairs.empty());
}

TEST_CASE("path graph weights add up to the cross-edge count") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Dag g = oracle::random_dag(static_cast<std::int32_t>(rng.uniform(1, 50)), 0.12, rng);
    PathDecomposition d = min_path_cover(g);
    EdgeClassification cls = classify_edges(g, d);
    PathGraph pg = build_path_graph(g, d, cls);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < pg.pairs.size(); ++i) {
      const auto& p = pg.pairs[i];
      CHECK(p.a < p.b);
      CHECK(p.weight > 0);
      if (i > 0) CHECK(std::make_pair(pg.pairs[i - 1].a, pg.pairs[i - 1].b) < std::make_pair(p.a, p.b));
      total += p.weight;
    }
    CHECK(total == cls.counts()[1]);
  }
}

TEST_CASE("greedy_order examples") {
  CHECK(greedy_order(graph_of(2, {{0, 1, 7}})) == PathOrder{0, 1});

  PathGraph tri = graph_of(3, {{0, 1, 5}, {0, 2, 1}, {1, 2, 3}});
  PathOrder order = greedy_order(tri);
  CHECK(order == PathOrder{0, 1, 2});
  // No arrangement puts more weight on adjacent pairs.
  std::vector<std::pair<std::pair<int, int>, int>> w{{{0, 1}, 5}, {{1, 2}, 3}, {{0, 2}, 1}};
  std::vector<int> perm{0, 1, 2};
  std::int64_t best = 0;
  do {
    best = std::max(best, oracle::adjacent_weight(w, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(oracle::adjacent_weight(w, {order.begin(), order.end()}) == 8);
  CHECK(best == 8);

  CHECK(greedy_order(graph_of(4, {})) == PathOrder{0, 1, 2, 3});
  CHECK(greedy_order(graph_of(0, {})).empty());
}

TEST_CASE("greedy_order appends at the nearer chain end") {
  // {1,2} first builds [1,2]; {0,1}: 1 is at the left end -> [0,1,2];
  // {2,3}: 2 is at the right end -> [0,1,2,3].
  CHECK(greedy_order(graph_of(4, {{1, 2, 9}, {0, 1, 5}, {2, 3, 4}})) == PathOrder{0, 1, 2, 3});
  // A partner strictly inside a chain still appends at the nearer end.
  // [0,1] then 2 right of 1 -> [0,1,2]; {0,3}: 0 is at the left end.
  CHECK(greedy_order(graph_of(4, {{0, 1, 9}, {1, 2, 8}, {0, 3, 7}})) == PathOrder{3, 0, 1, 2});
  // Equal distance goes right: chain [0,1,2], partner 1 in the middle.
  CHECK(greedy_order(graph_of(4, {{0, 1, 9}, {1, 2, 8}, {1, 3, 7}})) == PathOrder{0, 1, 2, 3});
}

TEST_CASE("separate chains are concatenated by length, then smallest member") {
  // Chains [3,4,5] and [0,1]; path 2 is never placed.
  PathOrder order = greedy_order(graph_of(6, {{0, 1, 2}, {3, 4, 9}, {4, 5, 9}}));
  CHECK(order == PathOrder{3, 4, 5, 0, 1, 2});
  // Equal lengths: the chain holding path 1 precedes the one holding 2.
  CHECK(greedy_order(graph_of(4, {{2, 3, 5}, {0, 1, 5}})) == PathOrder{0, 1, 2, 3});
}

TEST_CASE("greedy_order properties") {
  oracle::Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<std::int32_t>(rng.uniform(0, 14));
    PathGraph pg = random_path_graph(rng, k, rng.chance(0.5) ? 0.2 : 0.6, rng.chance(0.5) ? 3 : 50);
    PathOrder order = greedy_order(pg);
    CHECK(is_permutation_of_k(order, k));

    PathGraph reversed = pg;
    std::reverse(reversed.pairs.begin(), reversed.pairs.end());
    CHECK(greedy_order(reversed) == order);

    if (!pg.pairs.empty()) {
      // The heaviest pair, ties by (a, b), ends up side by side.
      auto heaviest = *std::min_element(pg.pairs.begin(), pg.pairs.end(), [](const auto& p, const auto& q) {
        if (p.weight != q.weight) return p.weight > q.weight;
        return std::make_pair(p.a, p.b) < std::make_pair(q.a, q.b);
      });
      auto pa = std::find(order.begin(), order.end(), heaviest.a) - order.begin();
      auto pb = std::find(order.begin(), order.end(), heaviest.b) - order.begin();
      CHECK(std::abs(pa - pb) == 1);
    }
  }
}

TEST_CASE("identity_order") { CHECK(identity_order(3) == PathOrder{0, 1, 2}); }

TEST_CASE("brute_force_order minimises the weighted span") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = static_cast<std::int32_t>(rng.uniform(1, 6));
    PathGraph pg = random_path_graph(rng, k, 0.6, 9);
    PathOrder order = brute_force_order(pg);
    CHECK(is_permutation_of_k(order, k));
    PathOrder perm = identity_order(k);
    std::int64_t best = weighted_span(pg, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, weighted_span(pg, perm));
    CHECK(weighted_span(pg, order) == best);
    CHECK(weighted_span(pg, order) <= weighted_span(pg, greedy_order(pg)));
  }
  CHECK_THROWS_AS(brute_force_order(graph_of(7, {})), Error);
}

TEST_CASE("weighted_span counts distance times weight") {
  PathGraph pg = graph_of(3, {{0, 2, 4}, {1, 2, 1}});
  CHECK(weighted_span(pg, {0, 1, 2}) == 4 * 2 + 1 * 1);
  CHECK(weighted_span(pg, {0, 2, 1}) == 4 + 1);
}
