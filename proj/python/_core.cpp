#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathlayout/document.hpp"
#include "pathlayout/error.hpp"
#include "pathlayout/generator.hpp"
#include "pathlayout/io.hpp"
#include "pathlayout/pipeline.hpp"
#include "pathlayout/svg.hpp"

namespace py = pybind11;
using namespace pathlayout;

namespace {

using IntEdges = std::vector<std::pair<std::int32_t, std::int32_t>>;
using TokenEdges = std::vector<std::pair<std::string, std::string>>;

Dag dag_of(std::int32_t n, const IntEdges& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.push_back({u, v});
  return Dag(n, std::move(out));
}

std::vector<std::vector<std::int32_t>> paths_of(const PathDecomposition& d) {
  return {d.paths().begin(), d.paths().end()};
}

py::dict metrics_dict(const MetricsReport& m) {
  py::dict out;
  out["crossings"] = m.crossings.total();
  out["xx"] = m.crossings.cross_cross;
  out["xp"] = m.crossings.cross_path;
  out["xi"] = m.crossings.cross_interval;
  out["ii"] = m.crossings.interval_interval;
  out["bends"] = m.bends;
  out["width"] = m.width;
  out["height"] = m.height;
  out["area"] = m.area;
  out["total_edge_length"] = m.total_edge_length;
  return out;
}

py::dict run(const Dag& g, const std::string& decompose, const std::string& order, bool compact,
             bool show_transitive, const std::optional<std::vector<std::vector<std::string>>>& paths) {
  PipelineOptions opts;
  opts.decompose = parse_decompose_mode(decompose);
  opts.order = parse_order_mode(order);
  opts.compact = compact;
  opts.show_transitive = show_transitive;
  if (paths) {
    opts.user_paths = *paths;
    opts.decompose = DecomposeMode::kFile;
  }
  PipelineResult r;
  {
    py::gil_scoped_release release;
    r = run_pipeline(g, opts);
  }
  SvgOptions svg;
  svg.show_transitive = show_transitive;
  py::dict out;
  out["k"] = r.decomposition.path_count();
  out["x"] = r.layout.x;
  out["y"] = r.layout.y;
  out["paths"] = paths_of(r.decomposition);
  out["metrics"] = metrics_dict(r.metrics);
  out["document"] = serialize(make_document(g, r.decomposition, r.visible, r.metrics));
  out["svg"] = render_svg(g, r.layout, svg);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Path-based hierarchical drawings of directed acyclic graphs";

  // Instances carry `code` and `subjects` next to the message.
  static py::handle error_type = py::exception<Error>(m, "PathlayoutError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("subjects") = e.subjects();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "generate",
      [](std::int32_t n, double avg_degree, std::uint64_t seed) {
        Dag g = generate_dag({n, avg_degree, seed});
        IntEdges out;
        for (const Edge& e : g.edges()) out.emplace_back(e.source, e.target);
        return out;
      },
      py::arg("n"), py::arg("avg_degree"), py::arg("seed"),
      "Random DAG edges (source, target) over vertices 0..n-1; m = round(n * avg_degree / 2).");

  m.def(
      "topological_sort", [](std::int32_t n, const IntEdges& edges) { return topological_sort(dag_of(n, edges)).rank; },
      py::arg("n"), py::arg("edges"), "Rank of each vertex, smallest available id first.");

  m.def(
      "longest_path_layering",
      [](std::int32_t n, const IntEdges& edges) {
        Layering l = longest_path_layering(dag_of(n, edges));
        return std::make_pair(l.level, l.longest);
      },
      py::arg("n"), py::arg("edges"), "(level per vertex, length of a longest path)");

  m.def(
      "min_path_cover", [](std::int32_t n, const IntEdges& edges) { return paths_of(min_path_cover(dag_of(n, edges))); },
      py::arg("n"), py::arg("edges"));

  m.def(
      "greedy_path_cover",
      [](std::int32_t n, const IntEdges& edges) {
        Dag g = dag_of(n, edges);
        return paths_of(greedy_path_cover(g, topological_sort(g)));
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "layout",
      [](const TokenEdges& edges, const std::vector<std::string>& vertices, const std::string& decompose,
         const std::string& order, bool compact, bool show_transitive,
         const std::optional<std::vector<std::vector<std::string>>>& paths) {
        return run(build_dag(edges, vertices), decompose, order, compact, show_transitive, paths);
      },
      py::arg("edges"), py::arg("vertices") = std::vector<std::string>{}, py::arg("decompose") = "min",
      py::arg("order") = "greedy", py::arg("compact") = true, py::arg("show_transitive") = true,
      py::arg("paths") = py::none(),
      "Full pipeline over token edges. Returns k, x, y, paths, metrics, document (JSON) and svg.");

  m.def(
      "layout_edge_list",
      [](const std::string& text, const std::string& decompose, const std::string& order, bool compact,
         bool show_transitive) {
        return run(parse_edge_list(text), decompose, order, compact, show_transitive, std::nullopt);
      },
      py::arg("text"), py::arg("decompose") = "min", py::arg("order") = "greedy", py::arg("compact") = true,
      py::arg("show_transitive") = true);

  m.def("csv_header", [] { return std::string(csv_header()); });
}
