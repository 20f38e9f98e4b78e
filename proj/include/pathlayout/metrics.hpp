#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathlayout/layout.hpp"

namespace pathlayout {

enum class SegmentKind : std::uint8_t { kCross, kPath, kInterval };

// One straight piece of drawn geometry. Normalised so that a.y < b.y, or
// a.y == b.y and a.x < b.x for horizontal connectors. `object` groups the
// pieces of one drawn object: an edge polyline, or an interval together
// with its connectors. Endpoints flagged as vertices are logical endpoints.
struct DrawnSegment {
  Point a;
  Point b;
  bool a_is_vertex = false;
  bool b_is_vertex = false;
  std::int32_t object = 0;
  SegmentKind kind = SegmentKind::kCross;
};

// Every routed edge segment, one vertical segment per interval and one
// horizontal connector per connector row.
std::vector<DrawnSegment> drawn_segments(const GridLayout& layout);

struct CrossingCounts {
  std::int64_t cross_cross = 0;
  std::int64_t cross_path = 0;
  std::int64_t cross_interval = 0;
  std::int64_t interval_interval = 0;
  // path x path and path x interval; zero for layouts built by this library.
  std::int64_t other = 0;

  std::int64_t total() const {
    return cross_cross + cross_path + cross_interval + interval_interval + other;
  }
  void add(SegmentKind a, SegmentKind b, std::int64_t count = 1);

  friend bool operator==(const CrossingCounts&, const CrossingCounts&) = default;
};

// Counts unordered pairs of segments from different objects that share a
// point, except when the only shared point is a vertex that is a logical
// endpoint of either segment. Collinear overlaps count once.
//
// Row sweep: segments are ordered by their x on each integer row; crossings
// strictly between two rows are the inversions between consecutive orders,
// crossings on a row are found by grouping equal x. Runs in
// O(S log S + sum of row spans + crossings).
CrossingCounts count_crossings(std::span<const DrawnSegment> segments);
CrossingCounts count_crossings(const GridLayout& layout);

// Interior points of routed polylines plus one junction per connector row.
std::int64_t count_bends(const GridLayout& layout);

struct MetricsReport {
  CrossingCounts crossings;
  std::int64_t bends = 0;
  std::int64_t width = 0;   // distinct x over vertices, bends and junctions
  std::int64_t height = 0;  // distinct y over the same points
  std::int64_t area = 0;
  double total_edge_length = 0.0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

MetricsReport summarize(const GridLayout& layout);

std::string_view csv_header();
std::string csv_row(std::string_view graph_id, std::int64_t n, std::int64_t m, std::int64_t k,
                    const MetricsReport& report);

}  // namespace pathlayout
