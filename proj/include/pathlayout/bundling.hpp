#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathlayout/dag.hpp"
#include "pathlayout/decomposition.hpp"
#include "pathlayout/layout.hpp"

namespace pathlayout {

// Degree-driven bundling of transitive edges. Repeatedly takes the vertex
// with the largest remaining transitive in- or out-degree (outgoing wins
// ties, then the smaller id) and bundles all of those edges into one
// interval. O(m log n) with a lazily invalidated max-heap.
std::vector<Interval> extract_intervals(const Dag& g, const PathDecomposition& d,
                                        const EdgeClassification& cls, const GridLayout& layout);

enum class ColumnSide : std::uint8_t { kLeft, kRight };

// Columns for the intervals of one path. Entries index the interval list the
// assignment was built from; column 0 is the one next to the spine.
struct ColumnAssignment {
  std::vector<std::vector<std::size_t>> columns;
  ColumnSide side = ColumnSide::kLeft;
};

// True when the closed row ranges of a and b share a row.
bool overlaps(const Interval& a, const Interval& b);

// Interval-partitioning greedy: by ascending (start, finish, anchor), each
// interval goes to the lowest-index column it does not overlap, opening a new
// column when none fits. Uses the minimum number of columns. O(b log b).
ColumnAssignment place_intervals(std::span<const Interval> intervals, ColumnSide side = ColumnSide::kLeft);

// Groups intervals by path and places each group; the rightmost path gets
// its columns on the right. Indices in the result refer to `intervals`.
std::vector<ColumnAssignment> assign_columns(std::span<const Interval> intervals, std::int32_t path_count);

// Recomputes every x so each path's interval columns sit beside its spine:
// left paths emit [outer..inner columns, spine, bend column], the rightmost
// path emits [spine, inner..outer columns]. Rows are unchanged and existing
// routes are remapped onto the new columns.
GridLayout splice_columns(const GridLayout& layout, std::span<const Interval> intervals,
                          std::span<const ColumnAssignment> assignments);

// Crossings between interval segments and connectors inside one path's
// block of interval columns.
std::int64_t block_crossings(const GridLayout& layout, std::int32_t path);

// Adjacent swaps of interval columns inside each path block while a swap
// strictly lowers block_crossings. Column contents are never changed.
GridLayout reorder_interval_columns(const GridLayout& layout);

}  // namespace pathlayout
