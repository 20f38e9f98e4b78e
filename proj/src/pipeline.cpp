#include "pathlayout/pipeline.hpp"

#include <algorithm>

#include "pathlayout/error.hpp"

namespace pathlayout {

DecomposeMode parse_decompose_mode(std::string_view text) {
  if (text == "min") return DecomposeMode::kMin;
  if (text == "greedy") return DecomposeMode::kGreedy;
  if (text == "file") return DecomposeMode::kFile;
  throw Error(ErrorCode::kInvalidArgument, {std::string(text)}, "expected min|greedy|file");
}

OrderMode parse_order_mode(std::string_view text) {
  if (text == "greedy") return OrderMode::kGreedy;
  if (text == "identity") return OrderMode::kIdentity;
  if (text == "brute") return OrderMode::kBrute;
  throw Error(ErrorCode::kInvalidArgument, {std::string(text)}, "expected greedy|identity|brute");
}

std::string_view to_string(DecomposeMode mode) {
  switch (mode) {
    case DecomposeMode::kMin: return "min";
    case DecomposeMode::kGreedy: return "greedy";
    case DecomposeMode::kFile: return "file";
  }
  return "?";
}

std::string_view to_string(OrderMode mode) {
  switch (mode) {
    case OrderMode::kGreedy: return "greedy";
    case OrderMode::kIdentity: return "identity";
    case OrderMode::kBrute: return "brute";
  }
  return "?";
}

PipelineResult run_pipeline(const Dag& g, const PipelineOptions& options) {
  PipelineResult result;
  result.topo = topological_sort(g);

  PathDecomposition initial;
  switch (options.decompose) {
    case DecomposeMode::kMin: initial = min_path_cover(g); break;
    case DecomposeMode::kGreedy: initial = greedy_path_cover(g, result.topo); break;
    case DecomposeMode::kFile: initial = from_user_paths(g, options.user_paths); break;
  }
  // Classification depends only on path membership, not on path order.
  result.classification = classify_edges(g, initial);

  PathGraph pg = build_path_graph(g, initial, result.classification);
  switch (options.order) {
    case OrderMode::kGreedy: result.order = greedy_order(pg); break;
    case OrderMode::kIdentity: result.order = identity_order(initial.path_count()); break;
    case OrderMode::kBrute: result.order = brute_force_order(pg); break;
  }
  result.decomposition = initial.reordered(result.order);
  const PathDecomposition& d = result.decomposition;

  GridLayout layout = base_layout(g, d, result.topo);
  if (options.compact) layout = compact(g, layout);
  layout = route_cross_edges(g, d, result.classification, layout);

  std::vector<Interval> intervals = extract_intervals(g, d, result.classification, layout);
  std::vector<ColumnAssignment> columns = assign_columns(intervals, d.path_count());
  layout = splice_columns(layout, intervals, columns);
  result.layout = reorder_interval_columns(layout);

  for (std::int32_t y : result.layout.y) result.top_row = std::max(result.top_row, y);
  result.visible = options.show_transitive ? result.layout : without_transitive(result.layout);
  result.metrics = summarize(result.visible);
  return result;
}

}  // namespace pathlayout
