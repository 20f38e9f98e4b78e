// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pathlayout/bundling.hpp"
#include "pathlayout/document.hpp"
#include "pathlayout/experiment.hpp"
#include "pathlayout/generator.hpp"
#include "pathlayout/pipeline.hpp"
#include "pathlayout/svg.hpp"

using namespace pathlayout;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  int id;
  bool ok;
  std::string text;
};
std::vector<Line> lines;

void report(int id, const char* name, bool ok, const std::string& detail) {
  char head[96];
  std::snprintf(head, sizeof head, "%s  %2d  %-32s ", ok ? "PASS" : "FAIL", id, name);
  lines.push_back({id, ok, head + detail});
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Instance {
  std::string id;
  Dag g;
};

// Graphs for the "every instance" criteria: the compaction grid plus the
// standard ladder.
std::vector<Instance> corpus() {
  std::vector<Instance> out;
  static constexpr std::int32_t kSizes[] = {10, 50, 200, 1000};
  static constexpr double kDegrees[] = {1.25, 3.0, 5.0, 8.0};
  for (int i = 0; i < 100; ++i) {
    const std::int32_t n = kSizes[i % 4];
    const double deg = kDegrees[(i / 4) % 4];
    out.push_back({fmt("grid%d", i), generate_dag({n, deg, 1000u + static_cast<std::uint64_t>(i)})});
  }
  for (const GraphSpec& spec : standard_ladder(1)) {
    out.push_back({spec.id, generate_dag({spec.n, spec.avg_degree, spec.seed})});
  }
  return out;
}

std::int64_t distinct_vertex_columns(const GridLayout& l) {
  std::vector<std::int32_t> xs = l.x;
  for (const auto& r : l.routes) {
    for (std::size_t i = 1; i + 1 < r.size(); ++i) xs.push_back(r[i].x);
  }
  std::sort(xs.begin(), xs.end());
  return std::unique(xs.begin(), xs.end()) - xs.begin();
}

void criterion1() {
  auto t0 = Clock::now();
  static constexpr std::int32_t kSizes[] = {10, 50, 200, 1000};
  static constexpr double kDegrees[] = {1.25, 3.0, 5.0, 8.0};
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    Dag g = generate_dag({kSizes[i % 4], kDegrees[(i / 4) % 4], 1000u + static_cast<std::uint64_t>(i)});
    PathDecomposition d = min_path_cover(g);
    GridLayout c = compact(g, base_layout(g, d, topological_sort(g)));
    Layering lp = longest_path_layering(g);
    const std::int32_t top = c.y.empty() ? 0 : *std::max_element(c.y.begin(), c.y.end());
    if (c.y != lp.level || top != lp.longest) ++bad;
  }
  const double t = seconds_since(t0);
  report(1, "compaction equals longest path", bad == 0 && t < 10.0,
         fmt("100 DAGs, mismatches=%d, %.2fs (limit 10s)", bad, t));
}

void per_instance_criteria(const std::vector<Instance>& graphs) {
  int width_bad = 0, columns_bad = 0, partition_bad = 0, bends_bad = 0, map_bad = 0;
  std::int64_t worst_width_slack = -1;
  for (const Instance& inst : graphs) {
    const Dag& g = inst.g;
    for (bool compacted : {true, false}) {
      PipelineOptions opts;
      opts.compact = compacted;
      PipelineResult shown = run_pipeline(g, opts);
      opts.show_transitive = false;
      PipelineResult hidden = run_pipeline(g, opts);
      const std::int64_t k = shown.decomposition.path_count();

      // 2: width with transitive edges hidden.
      const std::int64_t w = hidden.metrics.width;
      if (g.vertex_count() > 0 && (w > 2 * k - 1 || distinct_vertex_columns(hidden.visible) > 2 * k - 1)) ++width_bad;
      worst_width_slack = std::max(worst_width_slack, w - (2 * k - 1));

      // 3: interval columns per path against the overlap-depth oracle.
      std::vector<std::vector<Interval>> per_path(static_cast<std::size_t>(k));
      for (const auto& p : shown.layout.intervals) per_path[static_cast<std::size_t>(p.interval.path_index)].push_back(p.interval);
      for (std::int64_t p = 0; p < k; ++p) {
        const auto& cols = shown.layout.interval_columns[static_cast<std::size_t>(p)];
        if (static_cast<std::int32_t>(cols.size()) != oracle::overlap_depth(per_path[static_cast<std::size_t>(p)])) {
          ++columns_bad;
        }
      }

      // 6: edge classes partition E.
      auto counts = shown.classification.counts();
      if (counts[0] + counts[1] + counts[2] != g.edge_count()) ++partition_bad;

      // 8: bend budget.
      std::int64_t connector_rows = 0;
      for (const auto& p : shown.layout.intervals) connector_rows += static_cast<std::int64_t>(p.interval.connector_rows.size());
      bool per_edge_ok = true;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& route = shown.layout.routes[static_cast<std::size_t>(e)];
        if (route.size() > 3 || (shown.layout.edge_class[static_cast<std::size_t>(e)] != EdgeClass::kCross && route.size() > 2)) {
          per_edge_ok = false;
        }
      }
      if (!per_edge_ok || shown.metrics.bends > counts[1] + connector_rows) ++bends_bad;

      // 11: hiding transitive edges moves no vertex.
      if (shown.layout.x != hidden.layout.x || shown.layout.y != hidden.layout.y ||
          shown.visible.x != hidden.visible.x || shown.visible.y != hidden.visible.y) {
        ++map_bad;
      }
      SvgOptions show_svg, hide_svg;
      hide_svg.show_transitive = false;
      const std::string a = render_svg(g, shown.layout, show_svg);
      const std::string b = render_svg(g, hidden.layout, hide_svg);
      auto vertex_layer = [](const std::string& svg) { return svg.substr(svg.find("<g id=\"vertices\"")); };
      if (vertex_layer(a) != vertex_layer(b)) ++map_bad;
    }
  }
  const auto runs = static_cast<int>(graphs.size()) * 2;
  report(2, "base width bound 2k-1", width_bad == 0,
         fmt("%d layouts, violations=%d, max(width-(2k-1))=%lld", runs, width_bad,
             static_cast<long long>(worst_width_slack)));
  report(3, "interval-column minimality", columns_bad == 0, fmt("%d layouts, paths off the oracle=%d", runs, columns_bad));
  report(6, "edge-class partition", partition_bad == 0, fmt("%d layouts, violations=%d", runs, partition_bad));
  report(8, "bend budget", bends_bad == 0, fmt("%d layouts, violations=%d", runs, bends_bad));
  report(11, "mental-map preservation", map_bad == 0, fmt("%d layout pairs, moved=%d", runs, map_bad));
}

void criterion4() {
  auto t0 = Clock::now();
  oracle::Rng rng(4);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    Dag g = oracle::random_dag(static_cast<std::int32_t>(rng.uniform(1, 7)), static_cast<double>(rng.uniform(10, 70)) / 100.0, rng);
    const std::int32_t k = min_path_cover(g).path_count();
    if (k != oracle::brute_min_partition(g) || k != g.vertex_count() - oracle::kuhn_matching_size(g)) ++bad;
  }
  const double t = seconds_since(t0);
  report(4, "minimum path cover", bad == 0 && t < 30.0, fmt("200 DAGs n<=7, mismatches=%d, %.2fs (limit 30s)", bad, t));
}

void criterion5() {
  oracle::Rng rng(5);
  int layouts = 0, bad = 0, attempts = 0;
  std::int64_t total = 0;
  while (layouts < 50 && attempts < 10000) {
    ++attempts;
    Dag g = oracle::random_dag(static_cast<std::int32_t>(rng.uniform(3, 14)), 0.3, rng);
    PipelineOptions opts;
    opts.compact = rng.chance(0.7);
    opts.order = rng.chance(0.5) ? OrderMode::kGreedy : OrderMode::kIdentity;
    auto segments = drawn_segments(run_pipeline(g, opts).layout);
    if (segments.size() > 40 || segments.size() < 4) continue;
    ++layouts;
    const CrossingCounts fast = count_crossings(segments);
    if (fast != oracle::pairwise_crossings(segments)) ++bad;
    total += fast.total();
  }
  report(5, "crossing counter vs pair checker", layouts == 50 && bad == 0,
         fmt("%d layouts with <=40 segments, mismatches=%d, crossings seen=%lld", layouts, bad,
             static_cast<long long>(total)));
}

void criterion7() {
  static constexpr double kDegrees[] = {1.25, 1.75, 3.0};
  bool ok = true;
  std::string detail;
  for (double deg : kDegrees) {
    int wins = 0, strict = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Dag g = generate_dag({100, deg, seed});
      PipelineOptions greedy, identity;
      identity.order = OrderMode::kIdentity;
      const double lg = run_pipeline(g, greedy).metrics.total_edge_length;
      const double li = run_pipeline(g, identity).metrics.total_edge_length;
      if (lg <= li + 1e-9) ++wins;
      if (lg < li - 1e-9) ++strict;
    }
    ok = ok && wins > 10;
    detail += fmt("%sdeg %.2f: %d/20 (%d strictly shorter)", detail.empty() ? "" : ", ", deg, wins, strict);
  }
  report(7, "ordering benefit (sparse)", ok, detail + " (need >10 each)");
}

void criterion9() {
  Dag g = generate_dag({10000, 10.0, 9});
  auto t0 = Clock::now();
  PipelineResult r = run_pipeline(g, {});
  const double t = seconds_since(t0);
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const double mib = static_cast<double>(usage.ru_maxrss) / 1024.0;  // ru_maxrss is KiB on Linux
  report(9, "complexity smoke test", t < 10.0 && mib < 1024.0,
         fmt("n=%d m=%d k=%d, %.2fs (limit 10s), peak RSS %.0f MiB (limit 1024)", g.vertex_count(), g.edge_count(),
             r.decomposition.path_count(), t, mib));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion10() {
  const auto root = std::filesystem::temp_directory_path() / "pathlayout_acceptance_determinism";
  std::filesystem::remove_all(root);
  ExperimentConfig cfg;
  cfg.graphs = standard_ladder(10);
  PipelineOptions identity, hidden;
  identity.order = OrderMode::kIdentity;
  hidden.show_transitive = false;
  cfg.variants = {{"greedy", {}}, {"identity", identity}, {"hidden", hidden}};
  cfg.output_dir = (root / "a").string();
  const std::string csv_a = run_experiment(cfg).csv;
  cfg.output_dir = (root / "b").string();
  const std::string csv_b = run_experiment(cfg).csv;
  int files = 0, differ = 0;
  for (const auto& entry : std::filesystem::directory_iterator(root / "a")) {
    ++files;
    if (slurp(entry.path()) != slurp(root / "b" / entry.path().filename())) ++differ;
  }
  std::filesystem::remove_all(root);
  report(10, "determinism", csv_a == csv_b && differ == 0 && files > 0,
         fmt("csv identical=%s, %d artifact files, differing=%d", csv_a == csv_b ? "yes" : "no", files, differ));
}

}  // namespace

int main() {
  criterion1();
  per_instance_criteria(corpus());
  criterion4();
  criterion5();
  criterion7();
  criterion9();
  criterion10();
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  int failures = 0;
  for (const Line& line : lines) {
    std::printf("%s\n", line.text.c_str());
    failures += line.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, lines.size());
  return failures;
}
