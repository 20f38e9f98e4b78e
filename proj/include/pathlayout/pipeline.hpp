#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pathlayout/bundling.hpp"
#include "pathlayout/dag.hpp"
#include "pathlayout/decomposition.hpp"
#include "pathlayout/layout.hpp"
#include "pathlayout/metrics.hpp"
#include "pathlayout/ordering.hpp"

namespace pathlayout {

enum class DecomposeMode { kMin, kGreedy, kFile };
enum class OrderMode { kGreedy, kIdentity, kBrute };

DecomposeMode parse_decompose_mode(std::string_view text);
OrderMode parse_order_mode(std::string_view text);
std::string_view to_string(DecomposeMode mode);
std::string_view to_string(OrderMode mode);

struct PipelineOptions {
  DecomposeMode decompose = DecomposeMode::kMin;
  OrderMode order = OrderMode::kGreedy;
  bool compact = true;
  bool show_transitive = true;
  std::vector<std::vector<std::string>> user_paths;  // for DecomposeMode::kFile
};

struct PipelineResult {
  PathDecomposition decomposition;  // paths in drawing order
  EdgeClassification classification;
  PathOrder order;                  // initial path index drawn at each position
  TopoOrder topo;
  std::int32_t top_row = 0;  // max y over vertices; L when compacted
  GridLayout layout;   // complete drawing, interval layer included
  GridLayout visible;  // what is rendered and measured
  MetricsReport metrics;
};

// decompose -> order -> base layout -> (compact) -> route -> bundle, splice,
// reorder interval columns -> metrics. The interval layer is always placed so
// that hiding it leaves every vertex where it was.
PipelineResult run_pipeline(const Dag& g, const PipelineOptions& options);

}  // namespace pathlayout
