#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "pathlayout/dag.hpp"
#include "pathlayout/error.hpp"
#include "pathlayout/generator.hpp"

using namespace pathlayout;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Dag diamond() { return Dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

template <typename F>
Error capture(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected pathlayout::Error");
  return Error(ErrorCode::kInvalidArgument, {});
}

}  // namespace

TEST_CASE("build_dag assigns ids by first appearance") {
  Pairs pairs{{"a", "b"}, {"b", "c"}};
  Dag g = build_dag(pairs);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  CHECK(g.label(2) == "c");
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});
}

TEST_CASE("build_dag reports a 2-cycle by its tokens") {
  Pairs pairs{{"a", "b"}, {"b", "a"}};
  Error e = capture([&] { build_dag(pairs); });
  CHECK(e.code() == ErrorCode::kCycleDetected);
  CHECK(e.subjects() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("cycle report names a real cycle") {
  Pairs pairs{{"s", "x"}, {"x", "y"}, {"y", "z"}, {"z", "x"}, {"z", "t"}};
  Error e = capture([&] { build_dag(pairs); });
  REQUIRE(e.code() == ErrorCode::kCycleDetected);
  CHECK(e.subjects() == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("self-loop names the vertex") {
  Pairs pairs{{"a", "b"}, {"q", "q"}};
  Error e = capture([&] { build_dag(pairs); });
  CHECK(e.code() == ErrorCode::kSelfLoop);
  CHECK(e.subjects() == std::vector<std::string>{"q"});
}

TEST_CASE("out-of-range endpoint is rejected") {
  Error e = capture([] { Dag(2, {{0, 2}}); });
  CHECK(e.code() == ErrorCode::kVertexOutOfRange);
}

TEST_CASE("duplicate edges collapse and are counted") {
  Pairs pairs{{"a", "b"}, {"a", "b"}, {"b", "c"}, {"a", "b"}};
  Dag g = build_dag(pairs);
  CHECK(g.edge_count() == 2);
  CHECK(g.collapsed_duplicates() == 2);
}

TEST_CASE("declared vertices come first and may be isolated") {
  Pairs pairs{{"b", "c"}};
  std::vector<std::string> declared{"z", "b"};
  Dag g = build_dag(pairs, declared);
  CHECK(g.vertex_count() == 3);
  CHECK(g.label(0) == "z");
  CHECK(g.label(1) == "b");
  CHECK(g.label(2) == "c");
  CHECK(g.out_degree(0) == 0);
  CHECK(g.in_degree(0) == 0);
}

TEST_CASE("adjacency in both directions and edge lookup") {
  Dag g = diamond();
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(3) == 2);
  CHECK(g.find_edge(1, 3) >= 0);
  CHECK(g.find_edge(3, 1) == -1);
  CHECK(g.find_edge(0, 3) == -1);
  for (EdgeId e : g.out_edges(0)) CHECK(g.edge(e).source == 0);
  for (EdgeId e : g.in_edges(3)) CHECK(g.edge(e).target == 3);
}

TEST_CASE("default labels are decimal ids") {
  Dag g(3, {{0, 1}});
  CHECK(g.label(2) == "2");
}

TEST_CASE("generated edge sets round-trip through build_dag") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig cfg{static_cast<std::int32_t>(10 + seed * 3), 1.0 + static_cast<double>(seed % 5), seed};
    Dag g = generate_dag(cfg);
    Pairs pairs;
    std::vector<std::string> declared;
    for (VertexId v = 0; v < g.vertex_count(); ++v) declared.push_back(g.label(v));
    for (const Edge& e : g.edges()) pairs.emplace_back(g.label(e.source), g.label(e.target));
    Dag h = build_dag(pairs, declared);
    CHECK(h.vertex_count() == cfg.n);
    CHECK(h.edge_count() == target_edge_count(cfg));
  }
}

TEST_CASE("topological_sort examples") {
  SUBCASE("chain") {
    TopoOrder t = topological_sort(Dag(3, {{0, 1}, {1, 2}}));
    CHECK(t.rank == std::vector<std::int32_t>{0, 1, 2});
  }
  SUBCASE("diamond uses smallest id first") {
    TopoOrder t = topological_sort(diamond());
    CHECK(t.rank == std::vector<std::int32_t>{0, 1, 2, 3});
  }
  SUBCASE("smallest available id, not smallest overall") {
    // 2 is a source; 0 waits for 1.
    TopoOrder t = topological_sort(Dag(3, {{1, 0}, {2, 1}}));
    CHECK(t.order == std::vector<VertexId>{2, 1, 0});
  }
  SUBCASE("empty graph") {
    TopoOrder t = topological_sort(Dag(0, {}));
    CHECK(t.rank.empty());
  }
}

TEST_CASE("topological_sort property: every edge points forward, rank is a permutation") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Dag g = oracle::random_dag(static_cast<std::int32_t>(rng.uniform(1, 40)), 0.15, rng);
    TopoOrder t = topological_sort(g);
    for (const Edge& e : g.edges()) CHECK(t.rank[static_cast<std::size_t>(e.source)] < t.rank[static_cast<std::size_t>(e.target)]);
    for (std::size_t i = 0; i < t.order.size(); ++i) CHECK(t.rank[static_cast<std::size_t>(t.order[i])] == static_cast<std::int32_t>(i));
    CHECK(topological_sort(g).rank == t.rank);
  }
}

TEST_CASE("longest_path_layering examples") {
  SUBCASE("single vertex") {
    Layering l = longest_path_layering(Dag(1, {}));
    CHECK(l.level == std::vector<std::int32_t>{0});
    CHECK(l.longest == 0);
  }
  SUBCASE("path of five") {
    Layering l = longest_path_layering(Dag(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK(l.level == std::vector<std::int32_t>{0, 1, 2, 3, 4});
    CHECK(l.longest == 4);
  }
  SUBCASE("diamond plus chord") {
    Dag g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
    Layering l = longest_path_layering(g);
    CHECK(l.level == oracle::brute_levels(g));
    CHECK(l.level == std::vector<std::int32_t>{0, 1, 1, 2});
    CHECK(l.longest == 2);
  }
  SUBCASE("empty graph") { CHECK(longest_path_layering(Dag(0, {})).longest == 0); }
}

TEST_CASE("longest_path_layering matches path enumeration for n <= 10") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Dag g = oracle::random_dag(static_cast<std::int32_t>(rng.uniform(1, 10)), 0.35, rng);
    Layering l = longest_path_layering(g);
    auto brute = oracle::brute_levels(g);
    CHECK(l.level == brute);
    CHECK(l.longest == (brute.empty() ? 0 : *std::max_element(brute.begin(), brute.end())));
    for (const Edge& e : g.edges()) {
      CHECK(l.level[static_cast<std::size_t>(e.target)] >= l.level[static_cast<std::size_t>(e.source)] + 1);
    }
  }
}
