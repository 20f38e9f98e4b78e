#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "pathlayout/document.hpp"
#include "pathlayout/error.hpp"
#include "pathlayout/experiment.hpp"
#include "pathlayout/generator.hpp"
#include "pathlayout/io.hpp"
#include "pathlayout/pipeline.hpp"
#include "pathlayout/svg.hpp"

namespace {

using namespace pathlayout;

struct PipelineFlags {
  std::string decompose = "min";
  std::string order = "greedy";
  std::string compact = "on";
  std::string transitive = "show";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--decompose", decompose, "Path decomposition")
        ->check(CLI::IsMember({"min", "greedy", "file"}))
        ->capture_default_str();
    cmd->add_option("--order", order, "Path ordering")
        ->check(CLI::IsMember({"greedy", "identity", "brute"}))
        ->capture_default_str();
    cmd->add_option("--compact", compact, "Vertical compaction")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--transitive", transitive, "Draw bundled transitive edges")
        ->check(CLI::IsMember({"show", "hide"}))
        ->capture_default_str();
  }

  PipelineOptions options() const {
    PipelineOptions o;
    o.decompose = parse_decompose_mode(decompose);
    o.order = parse_order_mode(order);
    o.compact = compact == "on";
    o.show_transitive = transitive == "show";
    return o;
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-based hierarchical drawings of directed acyclic graphs"};
  app.require_subcommand(1);

  PipelineFlags layout_flags;
  std::string input, paths_file, svg_out, json_out, metrics_out;
  auto* layout_cmd = app.add_subcommand("layout", "Lay out one edge-list graph");
  layout_cmd->add_option("--input", input, "Edge-list file")->required()->check(CLI::ExistingFile);
  layout_cmd->add_option("--paths", paths_file, "Path file, one comma-separated path per line")
      ->check(CLI::ExistingFile);
  layout_cmd->add_option("--svg", svg_out, "SVG output path");
  layout_cmd->add_option("--json", json_out, "Layout document output path");
  layout_cmd->add_option("--metrics", metrics_out, "CSV metrics output path ('-' for stdout)");
  layout_flags.add_to(layout_cmd);

  std::int32_t nodes = 0;
  double avg_degree = 0.0;
  std::uint64_t seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random DAG as an edge list");
  gen_cmd->add_option("--nodes", nodes, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--avg-degree", avg_degree, "Average degree 2m/n")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--output,-o", gen_out, "Output file (default stdout)");

  PipelineFlags exp_flags;
  std::vector<std::string> exp_inputs;
  std::string exp_dir, exp_metrics;
  std::int32_t exp_nodes = 0;
  double exp_degree = 0.0;
  std::uint64_t exp_seed = 1;
  bool compare_orders = false;
  auto* exp_cmd = app.add_subcommand("experiment", "Run the pipeline over a graph suite and tabulate metrics");
  exp_cmd->add_option("--input", exp_inputs, "Edge-list files (default: the generated ladder)")
      ->check(CLI::ExistingFile);
  exp_cmd->add_option("--nodes", exp_nodes, "Generate a single graph with this many vertices");
  exp_cmd->add_option("--avg-degree", exp_degree, "Average degree of the single generated graph");
  exp_cmd->add_option("--seed", exp_seed, "Base seed")->capture_default_str();
  exp_cmd->add_option("--out-dir", exp_dir, "Directory for per-graph SVG and JSON");
  exp_cmd->add_option("--metrics", exp_metrics, "CSV output path (default stdout)");
  exp_cmd->add_flag("--compare-orders", compare_orders, "Emit paired greedy and identity rows");
  exp_flags.add_to(exp_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*layout_cmd) {
      PipelineOptions opts = layout_flags.options();
      if (!paths_file.empty()) {
        opts.user_paths = parse_path_file(read_file(paths_file));
        opts.decompose = DecomposeMode::kFile;
      } else if (opts.decompose == DecomposeMode::kFile) {
        throw Error(ErrorCode::kInvalidArgument, {}, "--decompose file needs --paths");
      }
      const Dag g = parse_edge_list(read_file(input));
      const PipelineResult run = run_pipeline(g, opts);
      if (!svg_out.empty()) {
        SvgOptions svg;
        svg.show_transitive = opts.show_transitive;
        emit(svg_out, render_svg(g, run.layout, svg));
      }
      if (!json_out.empty()) emit(json_out, serialize(make_document(g, run.decomposition, run.visible, run.metrics)));
      const std::string table = std::string(csv_header()) + "\n" +
                                csv_row(input, g.vertex_count(), g.edge_count(), run.decomposition.path_count(),
                                        run.metrics) +
                                "\n";
      if (!metrics_out.empty()) {
        emit(metrics_out, table);
      } else if (svg_out.empty() && json_out.empty()) {
        emit("-", table);
      }
      return 0;
    }
    if (*gen_cmd) {
      emit(gen_out, write_edge_list(generate_dag({nodes, avg_degree, seed})));
      return 0;
    }
    if (*exp_cmd) {
      ExperimentConfig cfg;
      cfg.output_dir = exp_dir;
      if (!exp_inputs.empty()) {
        for (const auto& path : exp_inputs) cfg.graphs.push_back({path, 0, 0.0, 0, path});
      } else if (exp_nodes > 0) {
        cfg.graphs.push_back({"n" + std::to_string(exp_nodes), exp_nodes, exp_degree, exp_seed, {}});
      } else {
        cfg.graphs = standard_ladder(exp_seed);
      }
      PipelineOptions base = exp_flags.options();
      if (base.decompose == DecomposeMode::kFile) {
        throw Error(ErrorCode::kInvalidArgument, {}, "experiments support --decompose min|greedy");
      }
      if (compare_orders) {
        PipelineOptions identity = base;
        identity.order = OrderMode::kIdentity;
        PipelineOptions greedy = base;
        greedy.order = OrderMode::kGreedy;
        cfg.variants = {{"greedy", greedy}, {"identity", identity}};
      } else {
        cfg.variants = {{exp_flags.order, base}};
      }
      const ExperimentResult res = run_experiment(cfg);
      emit(exp_metrics, res.csv);
      for (const auto& failure : res.failures) std::cerr << "failed: " << failure << "\n";
      return res.failures.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
