#include "pathlayout/experiment.hpp"

#include <cstdio>
#include <filesystem>

#include "pathlayout/document.hpp"
#include "pathlayout/error.hpp"
#include "pathlayout/generator.hpp"
#include "pathlayout/io.hpp"
#include "pathlayout/svg.hpp"

namespace pathlayout {

namespace {

// File names keep only characters that are safe on every platform.
std::string file_stem(const std::string& id) {
  std::string out;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                    c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  std::vector<Variant> variants = cfg.variants;
  if (variants.empty()) variants.push_back({"default", {}});
  const bool suffix = variants.size() > 1;

  if (!cfg.output_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw Error(ErrorCode::kInvalidArgument, {cfg.output_dir}, "cannot create output directory");
  }

  ExperimentResult result;
  result.csv = std::string(csv_header()) + "\n";
  for (const GraphSpec& spec : cfg.graphs) {
    Dag g;
    try {
      g = spec.input.empty() ? generate_dag({spec.n, spec.avg_degree, spec.seed}) : parse_edge_list(read_file(spec.input));
    } catch (const std::exception& e) {
      result.failures.push_back(spec.id + ": " + e.what());
      continue;
    }
    for (const Variant& variant : variants) {
      const std::string id = suffix ? spec.id + "@" + variant.name : spec.id;
      try {
        PipelineResult run = run_pipeline(g, variant.options);
        result.csv += csv_row(id, g.vertex_count(), g.edge_count(), run.decomposition.path_count(), run.metrics);
        result.csv += "\n";
        if (!cfg.output_dir.empty()) {
          const std::filesystem::path base = std::filesystem::path(cfg.output_dir) / file_stem(id);
          SvgOptions svg;
          svg.show_transitive = variant.options.show_transitive;
          write_file(base.string() + ".svg", render_svg(g, run.layout, svg));
          write_file(base.string() + ".json",
                     serialize(make_document(g, run.decomposition, run.visible, run.metrics)));
        }
      } catch (const std::exception& e) {
        result.failures.push_back(id + ": " + e.what());
      }
    }
  }
  return result;
}

std::vector<GraphSpec> standard_ladder(std::uint64_t seed) {
  static constexpr std::int32_t kSizes[] = {20, 31, 50, 100, 200};
  static constexpr double kDegrees[] = {1.25, 1.75, 3.0, 6.0};
  std::vector<GraphSpec> out;
  std::uint64_t offset = 0;
  for (std::int32_t n : kSizes) {
    for (double deg : kDegrees) {
      char id[64];
      std::snprintf(id, sizeof id, "n%d_d%.2f", n, deg);
      out.push_back({id, n, deg, seed + offset++, {}});
    }
  }
  return out;
}

}  // namespace pathlayout
