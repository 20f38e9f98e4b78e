#include "pathlayout/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>

namespace pathlayout {

namespace {

DrawnSegment make_segment(Point p, Point q, bool p_vertex, bool q_vertex, std::int32_t object,
                          SegmentKind kind) {
  if (q.y < p.y || (q.y == p.y && q.x < p.x)) {
    std::swap(p, q);
    std::swap(p_vertex, q_vertex);
  }
  return {p, q, p_vertex, q_vertex, object, kind};
}

}  // namespace

std::vector<DrawnSegment> drawn_segments(const GridLayout& layout) {
  std::vector<DrawnSegment> segments;
  for (std::size_t e = 0; e < layout.routes.size(); ++e) {
    const auto& route = layout.routes[e];
    if (route.size() < 2) continue;
    SegmentKind kind = e < layout.edge_class.size() && layout.edge_class[e] == EdgeClass::kPath ? SegmentKind::kPath
                                                                                       : SegmentKind::kCross;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      segments.push_back(make_segment(route[i], route[i + 1], i == 0, i + 2 == route.size(),
                                      static_cast<std::int32_t>(e), kind));
    }
  }
  const auto first_interval_object = static_cast<std::int32_t>(layout.routes.size());
  for (std::size_t i = 0; i < layout.intervals.size(); ++i) {
    const auto& placed = layout.intervals[i];
    const Interval& iv = placed.interval;
    const auto object = first_interval_object + static_cast<std::int32_t>(i);
    const std::int32_t spine = layout.path_column[static_cast<std::size_t>(iv.path_index)];
    segments.push_back(make_segment({placed.x, iv.start}, {placed.x, iv.finish}, false, false, object,
                                    SegmentKind::kInterval));
    for (std::int32_t row : iv.connector_rows) {
      segments.push_back(make_segment({placed.x, row}, {spine, row}, false, true, object,
                                      SegmentKind::kInterval));
    }
  }
  return segments;
}

void CrossingCounts::add(SegmentKind a, SegmentKind b, std::int64_t count) {
  if (a > b) std::swap(a, b);
  if (a == SegmentKind::kCross) {
    switch (b) {
      case SegmentKind::kCross: cross_cross += count; return;
      case SegmentKind::kPath: cross_path += count; return;
      case SegmentKind::kInterval: cross_interval += count; return;
    }
  }
  if (a == SegmentKind::kInterval) {
    interval_interval += count;
    return;
  }
  other += count;
}

namespace {

// x of a non-horizontal segment on row r is num / den with den = dy > 0 and
// num = ax * dy + dx * (r - ay). All comparisons are exact in 64 bits for
// coordinates below ~10^6.
struct SweepSegment {
  std::int64_t ax, ay, by, dx, dy;
  bool a_vertex, b_vertex;
  std::int32_t object;
  SegmentKind kind;

  std::int64_t num_at(std::int64_t r) const { return ax * dy + dx * (r - ay); }
  bool vertex_endpoint_at(std::int64_t r) const {
    return (r == ay && a_vertex) || (r == by && b_vertex);
  }
};

struct Item {
  std::int32_t seg;
  std::int64_t den;
  std::int64_t cur;  // numerator of x on the current row
  std::int64_t nxt;  // numerator of x on the next row
};

inline int compare(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
  std::int64_t l = n1 * d2;
  std::int64_t r = n2 * d1;
  return (l > r) - (l < r);
}

struct Horizontal {
  std::int64_t row, x0, x1;
  bool a_vertex, b_vertex;
  std::int32_t object;
  SegmentKind kind;
};

class RowSweep {
 public:
  explicit RowSweep(std::span<const DrawnSegment> input) {
    for (const DrawnSegment& s : input) {
      if (s.a == s.b) continue;
      if (s.a.y == s.b.y) {
        horizontals_.push_back({s.a.y, s.a.x, s.b.x, s.a_is_vertex, s.b_is_vertex, s.object, s.kind});
      } else {
        segments_.push_back({s.a.x, s.a.y, s.b.y, s.b.x - s.a.x, s.b.y - s.a.y, s.a_is_vertex,
                             s.b_is_vertex, s.object, s.kind});
      }
    }
    std::sort(segments_.begin(), segments_.end(),
              [](const SweepSegment& p, const SweepSegment& q) { return p.ay < q.ay; });
    std::sort(horizontals_.begin(), horizontals_.end(), [](const Horizontal& p, const Horizontal& q) {
      return p.row != q.row ? p.row < q.row : p.x0 < q.x0;
    });
  }

  CrossingCounts run() {
    std::size_t next_start = 0;
    std::size_t next_horizontal = 0;
    std::vector<Item> active;
    std::vector<Item> starting;
    std::vector<Item> merged;
    while (next_start < segments_.size() || next_horizontal < horizontals_.size() || !active.empty()) {
      std::int64_t r;
      if (!active.empty()) {
        r = row_ + 1;
      } else {
        r = std::numeric_limits<std::int64_t>::max();
        if (next_start < segments_.size()) r = segments_[next_start].ay;
        if (next_horizontal < horizontals_.size()) r = std::min(r, horizontals_[next_horizontal].row);
      }
      row_ = r;

      starting.clear();
      while (next_start < segments_.size() && segments_[next_start].ay == r) {
        const auto& s = segments_[next_start];
        starting.push_back({static_cast<std::int32_t>(next_start), s.dy, s.num_at(r), s.num_at(r + 1)});
        ++next_start;
      }
      std::sort(starting.begin(), starting.end(), [](const Item& p, const Item& q) {
        int c = compare(p.cur, p.den, q.cur, q.den);
        if (c != 0) return c < 0;
        return compare(p.nxt, p.den, q.nxt, q.den) < 0;
      });

      merged.clear();
      merged.reserve(active.size() + starting.size());
      std::merge(active.begin(), active.end(), starting.begin(), starting.end(), std::back_inserter(merged),
                 [](const Item& p, const Item& q) { return compare(p.cur, p.den, q.cur, q.den) < 0; });

      count_row_meetings(merged, r);
      std::size_t h_end = next_horizontal;
      while (h_end < horizontals_.size() && horizontals_[h_end].row == r) ++h_end;
      count_horizontals(merged, next_horizontal, h_end, r);
      next_horizontal = h_end;

      active.clear();
      for (const Item& item : merged) {
        const auto& s = segments_[static_cast<std::size_t>(item.seg)];
        if (s.by > r) active.push_back({item.seg, item.den, item.cur, item.cur + s.dx});
      }
      count_strip(active);
      for (Item& item : active) item.cur = item.nxt;
    }
    return counts_;
  }

 private:
  void count_pair(const SweepSegment& a, const SweepSegment& b) {
    if (a.object != b.object) counts_.add(a.kind, b.kind);
  }

  // Pairs meeting at a point of row r.
  void count_row_meetings(const std::vector<Item>& merged, std::int64_t r) {
    std::size_t i = 0;
    while (i < merged.size()) {
      std::size_t j = i + 1;
      while (j < merged.size() && compare(merged[j].cur, merged[j].den, merged[i].cur, merged[i].den) == 0) ++j;
      for (std::size_t p = i; p < j; ++p) {
        const auto& a = segments_[static_cast<std::size_t>(merged[p].seg)];
        for (std::size_t q = p + 1; q < j; ++q) {
          const auto& b = segments_[static_cast<std::size_t>(merged[q].seg)];
          if (a.object == b.object) continue;
          // Already counted as a collinear overlap on an earlier row.
          if (a.ay < r && b.ay < r &&
              compare(merged[p].cur - a.dx, a.dy, merged[q].cur - b.dx, b.dy) == 0) {
            continue;
          }
          bool collinear_ahead = a.by > r && b.by > r &&
                                 compare(merged[p].cur + a.dx, a.dy, merged[q].cur + b.dx, b.dy) == 0;
          if (!collinear_ahead && (a.vertex_endpoint_at(r) || b.vertex_endpoint_at(r))) continue;
          count_pair(a, b);
        }
      }
      i = j;
    }
  }

  void count_horizontals(const std::vector<Item>& merged, std::size_t first, std::size_t last, std::int64_t r) {
    for (std::size_t h = first; h < last; ++h) {
      const Horizontal& hz = horizontals_[h];
      auto it = std::lower_bound(merged.begin(), merged.end(), hz.x0, [](const Item& item, std::int64_t x) {
        return item.cur < x * item.den;
      });
      for (; it != merged.end() && it->cur <= hz.x1 * it->den; ++it) {
        const auto& s = segments_[static_cast<std::size_t>(it->seg)];
        if (s.object == hz.object) continue;
        bool at_x0 = it->cur == hz.x0 * it->den;
        bool at_x1 = it->cur == hz.x1 * it->den;
        if ((at_x0 && hz.a_vertex) || (at_x1 && hz.b_vertex) || s.vertex_endpoint_at(r)) continue;
        counts_.add(hz.kind, s.kind);
      }
      for (std::size_t g = h + 1; g < last && horizontals_[g].x0 <= hz.x1; ++g) {
        const Horizontal& other = horizontals_[g];
        if (other.object == hz.object) continue;
        std::int64_t overlap = std::min(hz.x1, other.x1) - other.x0;
        // A single shared point is hz's right end and other's left end.
        if (overlap == 0 && (hz.b_vertex || other.a_vertex)) continue;
        counts_.add(hz.kind, other.kind);
      }
    }
  }

  // Inversions between the order on row r (current) and row r+1 (nxt),
  // i.e. crossings strictly inside the strip. Ties on row r are first
  // ordered by row r+1 so that only strict reversals are counted.
  void count_strip(std::vector<Item>& items) {
    std::size_t i = 0;
    while (i < items.size()) {
      std::size_t j = i + 1;
      while (j < items.size() && compare(items[j].cur, items[j].den, items[i].cur, items[i].den) == 0) ++j;
      if (j - i > 1) {
        std::sort(items.begin() + static_cast<std::ptrdiff_t>(i), items.begin() + static_cast<std::ptrdiff_t>(j),
                  [](const Item& p, const Item& q) { return compare(p.nxt, p.den, q.nxt, q.den) < 0; });
      }
      i = j;
    }
    for (std::size_t p = 1; p < items.size(); ++p) {
      Item moving = items[p];
      std::size_t q = p;
      while (q > 0 && compare(items[q - 1].nxt, items[q - 1].den, moving.nxt, moving.den) > 0) {
        count_pair(segments_[static_cast<std::size_t>(items[q - 1].seg)],
                   segments_[static_cast<std::size_t>(moving.seg)]);
        items[q] = items[q - 1];
        --q;
      }
      items[q] = moving;
    }
  }

  std::vector<SweepSegment> segments_;
  std::vector<Horizontal> horizontals_;
  std::int64_t row_ = 0;
  CrossingCounts counts_;
};

}  // namespace

CrossingCounts count_crossings(std::span<const DrawnSegment> segments) { return RowSweep(segments).run(); }

CrossingCounts count_crossings(const GridLayout& layout) { return count_crossings(drawn_segments(layout)); }

std::int64_t count_bends(const GridLayout& layout) {
  std::int64_t bends = 0;
  for (const auto& route : layout.routes) {
    if (route.size() > 2) bends += static_cast<std::int64_t>(route.size()) - 2;
  }
  for (const auto& placed : layout.intervals) {
    bends += static_cast<std::int64_t>(placed.interval.connector_rows.size());
  }
  return bends;
}

MetricsReport summarize(const GridLayout& layout) {
  MetricsReport report;
  std::vector<std::int32_t> xs(layout.x.begin(), layout.x.end());
  std::vector<std::int32_t> ys(layout.y.begin(), layout.y.end());
  for (const auto& route : layout.routes) {
    for (std::size_t i = 1; i + 1 < route.size(); ++i) {
      xs.push_back(route[i].x);
      ys.push_back(route[i].y);
    }
  }
  for (const auto& placed : layout.intervals) {
    if (!placed.interval.connector_rows.empty()) xs.push_back(placed.x);
    for (std::int32_t row : placed.interval.connector_rows) ys.push_back(row);
  }
  auto distinct = [](std::vector<std::int32_t>& v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::int64_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  report.width = distinct(xs);
  report.height = distinct(ys);
  report.area = report.width * report.height;

  auto segments = drawn_segments(layout);
  for (const DrawnSegment& s : segments) {
    report.total_edge_length += std::hypot(static_cast<double>(s.b.x - s.a.x), static_cast<double>(s.b.y - s.a.y));
  }
  report.crossings = count_crossings(segments);
  report.bends = count_bends(layout);
  return report;
}

std::string_view csv_header() {
  return "graph,n,m,k,crossings,xx,xp,xi,ii,bends,width,height,area,total_edge_length";
}

std::string csv_row(std::string_view graph_id, std::int64_t n, std::int64_t m, std::int64_t k,
                    const MetricsReport& report) {
  std::string id(graph_id);
  if (id.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : id) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    id = quoted + "\"";
  }
  char length[64];
  std::snprintf(length, sizeof(length), "%.6f", report.total_edge_length);
  const auto& c = report.crossings;
  std::string row = id;
  for (std::int64_t value : {n, m, k, c.total(), c.cross_cross, c.cross_path, c.cross_interval,
                             c.interval_interval, report.bends, report.width, report.height, report.area}) {
    row += ',';
    row += std::to_string(value);
  }
  row += ',';
  row += length;
  return row;
}

}  // namespace pathlayout
