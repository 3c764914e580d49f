#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "frp/backwards.hpp"
#include "frp/bounded.hpp"
#include "frp/frp2.hpp"
#include "frp/gadget.hpp"
#include "frp/gen.hpp"
#include "frp/graph.hpp"
#include "frp/jsonio.hpp"
#include "frp/oracle.hpp"

namespace py = pybind11;
using namespace frp;

namespace {

py::object dist_obj(Dist d) {
    if (is_inf(d)) return py::none();
    return py::int_(d);
}

Graph graph_from_tuples(std::int32_t n,
                        const std::vector<std::tuple<std::int32_t, std::int32_t, Weight>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [tail, head, w] : edges) es.push_back({tail, head, w});
    return make_graph(n, es);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fault-tolerant shortest path toolkit (C++ core)";

    py::register_exception<FrpError>(m, "FrpError");

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", [](const Graph& g) { return g.n; })
        .def_property_readonly("m", [](const Graph& g) { return g.m(); })
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<std::int32_t, std::int32_t, Weight>> out;
                 out.reserve(g.edges.size());
                 for (const Edge& e : g.edges) out.emplace_back(e.tail, e.head, e.w);
                 return out;
             })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n) + " m=" + std::to_string(g.m()) + ">";
        });

    m.def("make_graph", &graph_from_tuples, py::arg("n"), py::arg("edges"),
          "build a graph from (tail, head, weight) triples; rejects negative cycles");
    m.def("load_edge_list", [](const std::string& text) { return load_edge_list(text); },
          py::arg("text"));
    m.def("dump_edge_list", [](const Graph& g) { return dump_edge_list(g); }, py::arg("graph"));

    m.def("gen_digraph", &gen_digraph, py::arg("n"), py::arg("p"), py::arg("wmin"), py::arg("wmax"),
          py::arg("seed"));
    m.def("gen_undirected", &gen_undirected, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_path_plus", &gen_path_plus, py::arg("n"), py::arg("extra"), py::arg("seed"));

    m.def("shortest_path_json",
          [](const Graph& g, VertexId s, VertexId t) { return path_to_json(shortest_path(g, s, t)); },
          py::arg("graph"), py::arg("s"), py::arg("t"));

    m.def("two_frp_json",
          [](const Graph& g, VertexId s, VertexId t) {
              return two_fault_table_to_json(two_frp(g, s, t), g);
          },
          py::arg("graph"), py::arg("s"), py::arg("t"));

    m.def("f_frp_json",
          [](const Graph& g, VertexId s, VertexId t, std::int32_t k) {
              return fault_tuple_table_to_json(f_frp(g, s, t, k), g);
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k") = 3);

    m.def("two_frp_bounded_json",
          [](const Graph& g, VertexId s, VertexId t, Weight M, std::int32_t g_param) {
              return two_fault_table_to_json(two_frp_bounded(g, s, t, M, g_param), g);
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("M"), py::arg("g_param") = 0);

    m.def("f_table_json",
          [](const Graph& g, VertexId s, VertexId t) {
              const PathSeq pi = shortest_path(g, s, t);
              return f_table_to_json(compute_f_dp(g, pi, apsp_off_path(g, pi)));
          },
          py::arg("graph"), py::arg("s"), py::arg("t"));

    m.def("f_table_scaled_json",
          [](const Graph& g, VertexId s, VertexId t, Weight M, std::int32_t L, std::uint64_t seed) {
              const PathSeq pi = shortest_path(g, s, t);
              return f_table_to_json(compute_f_scaled(g, pi, M, L, seed));
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("M"), py::arg("L") = 0,
          py::arg("seed") = 1);

    m.def("brute_dist",
          [](const Graph& g, VertexId s, VertexId t, const std::vector<EdgeId>& removed) {
              return dist_obj(brute_dist(g, s, t, removed));
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("removed") = std::vector<EdgeId>{},
          "exact distance with the given edges removed; None when unreachable");

    m.def("has_triangle_brute", &has_triangle_brute, py::arg("graph"));

    m.def("triangle_detect",
          [](const Graph& tri, std::int32_t k, std::int32_t L, const std::string& engine) {
              if (L <= 0) {
                  const double exp = static_cast<double>(k) / (k + 1.0);
                  L = std::max<std::int32_t>(
                      1, static_cast<std::int32_t>(std::llround(std::pow(std::max(tri.n, 2), exp))));
              }
              const GadgetEngine eng =
                  engine == "brute" ? gadget_engine_brute() : gadget_engine_toolkit(k);
              TriangleWitness wit;
              const bool found = triangle_detect_via_queries(tri, k, L, eng, &wit);
              if (!found) return py::make_tuple(false, py::none(), py::none());
              return py::make_tuple(true, py::int_(wit.b), py::int_(wit.u));
          },
          py::arg("graph"), py::arg("k") = 2, py::arg("L") = 0, py::arg("engine") = "toolkit",
          "returns (found, bucket, query_index)");

    m.def("gadget_json",
          [](const Graph& tri, std::int32_t b, std::int32_t L, std::int32_t k) {
              auto [g, lay] = build_gadget(tri, b, L, k);
              return py::make_tuple(dump_edge_list(g), gadget_layout_to_json(lay));
          },
          py::arg("graph"), py::arg("b"), py::arg("L"), py::arg("k") = 2,
          "returns (edge_list_text, layout_json) for one bucket's instance");
}
