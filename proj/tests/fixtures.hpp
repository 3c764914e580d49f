#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frp/gen.hpp"
#include "frp/graph.hpp"

namespace frptest {

using namespace frp;

// Hand-checked instance used across the suites. The canonical 0 -> 5 path is
// the unique zero-length chain 0,1,2,3,4,5; the detour edges force every
// two-fault case: (0,3) re-enters the path ahead, (4,1) and (5,1) jump
// backwards, (2,5) exits early.
//
//   id: 0..4   the path edges (w = 0 each)
//   id: 5      0 -> 3  w 2
//   id: 6      2 -> 5  w 2
//   id: 7      5 -> 1  w 1
//   id: 8      4 -> 1  w 2
inline Graph cex_graph() {
    std::vector<Edge> es = {
        {0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0},
        {0, 3, 2}, {2, 5, 2}, {5, 1, 1}, {4, 1, 2},
    };
    return make_graph(6, std::move(es));
}

inline std::string cex_edge_list() { return dump_edge_list(cex_graph()); }

// First edge u -> v by id order; fails the test setup when absent.
inline EdgeId edge_between(const Graph& g, VertexId u, VertexId v) {
    for (EdgeId id : g.out[static_cast<std::size_t>(u)])
        if (g.edges[static_cast<std::size_t>(id)].head == v) return id;
    fail(Err::UnknownEdgeId, "no edge " + std::to_string(u) + " -> " + std::to_string(v));
}

// Seeded digraph redrawn until t = n-1 is reachable from 0.
inline Graph reachable_digraph(std::int32_t n, double p, Weight wmin, Weight wmax,
                               std::uint64_t seed) {
    Graph g = gen_digraph(n, p, wmin, wmax, seed);
    for (int att = 0; is_inf(sssp(g, 0).dist[static_cast<std::size_t>(n - 1)]); ++att) {
        if (att >= 300) fail(Err::BadParams, "no reachable draw for this seed");
        g = gen_digraph(n, p, wmin, wmax, seed + (att + 1) * 0xd1342543de82ef95ull);
    }
    return g;
}

}  // namespace frptest
