#include "pathlayout/document.hpp"

#include <json.hpp>

#include "pathlayout/error.hpp"

namespace pathlayout {

namespace {

using Json = nlohmann::ordered_json;

EdgeClass edge_class_from(const std::string& s) {
  if (s == "path") return EdgeClass::kPath;
  if (s == "cross") return EdgeClass::kCross;
  if (s == "transitive") return EdgeClass::kPathTransitive;
  throw Error(ErrorCode::kInvalidArgument, {s}, "unknown edge class");
}

Json points_to_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const Point& p : points) out.push_back(Json::array({p.x, p.y}));
  return out;
}

}  // namespace

LayoutDocument make_document(const Dag& g, const PathDecomposition& d, const GridLayout& layout,
                             const MetricsReport& metrics) {
  LayoutDocument doc;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    doc.vertices.push_back({g.label(v), layout.x[static_cast<std::size_t>(v)], layout.y[static_cast<std::size_t>(v)]});
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    LayoutDocument::DrawnEdge edge;
    edge.source = g.label(g.edge(e).source);
    edge.target = g.label(g.edge(e).target);
    edge.edge_class = layout.edge_class.empty() ? EdgeClass::kPath : layout.edge_class[static_cast<std::size_t>(e)];
    if (static_cast<std::size_t>(e) < layout.routes.size()) edge.polyline = layout.routes[static_cast<std::size_t>(e)];
    doc.edges.push_back(std::move(edge));
  }
  for (const auto& placed : layout.intervals) {
    const Interval& iv = placed.interval;
    LayoutDocument::Bundle bundle;
    bundle.path = iv.path_index;
    bundle.column = placed.x;
    bundle.anchor = g.label(iv.anchor);
    bundle.direction = iv.direction;
    bundle.start = iv.start;
    bundle.finish = iv.finish;
    bundle.connector_rows = iv.connector_rows;
    bundle.members.assign(iv.members.begin(), iv.members.end());
    doc.intervals.push_back(std::move(bundle));
  }
  for (const auto& path : d.paths()) {
    auto& tokens = doc.paths.emplace_back();
    for (VertexId v : path) tokens.push_back(g.label(v));
  }
  doc.metrics = metrics;
  return doc;
}

std::string serialize(const LayoutDocument& doc) {
  Json root;
  Json vertices = Json::array();
  for (const auto& v : doc.vertices) vertices.push_back(Json{{"token", v.token}, {"x", v.x}, {"y", v.y}});
  Json edges = Json::array();
  for (const auto& e : doc.edges) {
    edges.push_back(Json{{"source", e.source},
                         {"target", e.target},
                         {"class", std::string(to_string(e.edge_class))},
                         {"polyline", points_to_json(e.polyline)}});
  }
  Json intervals = Json::array();
  for (const auto& b : doc.intervals) {
    intervals.push_back(Json{{"path", b.path},
                             {"column", b.column},
                             {"anchor", b.anchor},
                             {"direction", b.direction == BundleDirection::kIncoming ? "incoming" : "outgoing"},
                             {"start", b.start},
                             {"finish", b.finish},
                             {"connector_rows", b.connector_rows},
                             {"members", b.members}});
  }
  const auto& c = doc.metrics.crossings;
  root["vertices"] = std::move(vertices);
  root["edges"] = std::move(edges);
  root["intervals"] = std::move(intervals);
  root["paths"] = doc.paths;
  root["metrics"] = Json{{"crossings", Json{{"total", c.total()},
                                            {"xx", c.cross_cross},
                                            {"xp", c.cross_path},
                                            {"xi", c.cross_interval},
                                            {"ii", c.interval_interval},
                                            {"other", c.other}}},
                         {"bends", doc.metrics.bends},
                         {"width", doc.metrics.width},
                         {"height", doc.metrics.height},
                         {"area", doc.metrics.area},
                         {"total_edge_length", doc.metrics.total_edge_length}};
  return root.dump(1) + "\n";
}

LayoutDocument parse_layout_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, {}, std::string("malformed layout document: ") + e.what());
  }
  try {
    LayoutDocument doc;
    for (const auto& v : root.at("vertices")) {
      doc.vertices.push_back({v.at("token").get<std::string>(), v.at("x").get<std::int32_t>(),
                              v.at("y").get<std::int32_t>()});
    }
    for (const auto& e : root.at("edges")) {
      LayoutDocument::DrawnEdge edge;
      edge.source = e.at("source").get<std::string>();
      edge.target = e.at("target").get<std::string>();
      edge.edge_class = edge_class_from(e.at("class").get<std::string>());
      for (const auto& p : e.at("polyline")) edge.polyline.push_back({p.at(0).get<std::int32_t>(), p.at(1).get<std::int32_t>()});
      doc.edges.push_back(std::move(edge));
    }
    for (const auto& b : root.at("intervals")) {
      LayoutDocument::Bundle bundle;
      bundle.path = b.at("path").get<std::int32_t>();
      bundle.column = b.at("column").get<std::int32_t>();
      bundle.anchor = b.at("anchor").get<std::string>();
      bundle.direction = b.at("direction").get<std::string>() == "incoming" ? BundleDirection::kIncoming
                                                                            : BundleDirection::kOutgoing;
      bundle.start = b.at("start").get<std::int32_t>();
      bundle.finish = b.at("finish").get<std::int32_t>();
      bundle.connector_rows = b.at("connector_rows").get<std::vector<std::int32_t>>();
      bundle.members = b.at("members").get<std::vector<std::int32_t>>();
      doc.intervals.push_back(std::move(bundle));
    }
    doc.paths = root.at("paths").get<std::vector<std::vector<std::string>>>();
    const auto& m = root.at("metrics");
    const auto& c = m.at("crossings");
    doc.metrics.crossings.cross_cross = c.at("xx").get<std::int64_t>();
    doc.metrics.crossings.cross_path = c.at("xp").get<std::int64_t>();
    doc.metrics.crossings.cross_interval = c.at("xi").get<std::int64_t>();
    doc.metrics.crossings.interval_interval = c.at("ii").get<std::int64_t>();
    doc.metrics.crossings.other = c.at("other").get<std::int64_t>();
    doc.metrics.bends = m.at("bends").get<std::int64_t>();
    doc.metrics.width = m.at("width").get<std::int64_t>();
    doc.metrics.height = m.at("height").get<std::int64_t>();
    doc.metrics.area = m.at("area").get<std::int64_t>();
    doc.metrics.total_edge_length = m.at("total_edge_length").get<double>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, {}, std::string("malformed layout document: ") + e.what());
  }
}

}  // namespace pathlayout
