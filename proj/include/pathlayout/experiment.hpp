#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathlayout/pipeline.hpp"

namespace pathlayout {

// A generated graph, or a loaded one when `input` names an edge-list file.
struct GraphSpec {
  std::string id;
  std::int32_t n = 0;
  double avg_degree = 0.0;
  std::uint64_t seed = 0;
  std::string input;
};

struct Variant {
  std::string name;
  PipelineOptions options;
};

struct ExperimentConfig {
  std::vector<GraphSpec> graphs;
  std::vector<Variant> variants;  // empty means one default variant
  std::string output_dir;         // empty disables SVG and JSON artifacts
};

struct ExperimentResult {
  std::string csv;                    // header plus one row per graph and variant
  std::vector<std::string> failures;  // "<id>: <message>"
};

// A failing graph is reported and skipped; the remaining graphs still run.
// Row ids carry an "@variant" suffix when more than one variant is given.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Five sizes by four average degrees, sorted by n then degree.
std::vector<GraphSpec> standard_ladder(std::uint64_t seed);

}  // namespace pathlayout
