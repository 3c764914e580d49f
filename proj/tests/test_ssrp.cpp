#include <doctest.h>

#include "frp/gen.hpp"
#include "frp/oracle.hpp"
#include "frp/ssrp.hpp"

#include "fixtures.hpp"

using namespace frp;
using namespace frptest;

TEST_CASE("pair replacement distances on the hand-checked instance") {
    const Graph g = cex_graph();
    const PairReplacement rep = replacement_paths_pair(g, 0, 5);
    CHECK(rep.path.verts == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    REQUIRE(rep.d.size() == 5);
    // Removing any single path edge leaves a 2-weight detour.
    for (std::size_t k = 0; k < 5; ++k) CHECK(rep.d[k] == 2);
}

TEST_CASE("bridges report infinite replacement") {
    std::vector<Edge> es = {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}};
    const Graph g = make_graph(3, es);
    const PairReplacement rep = replacement_paths_pair(g, 0, 2);
    REQUIRE(rep.d.size() == 2);
    CHECK(rep.d[0] == 5);  // 0 -> 2 direct
    CHECK(rep.d[1] == 5);
    const Graph chain = make_graph(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});
    const PairReplacement rep2 = replacement_paths_pair(chain, 0, 2);
    CHECK(is_inf(rep2.d[0]));
    CHECK(is_inf(rep2.d[1]));
}

TEST_CASE("pair replacement matches brute removal across seeds") {
    for (std::uint64_t seed : {41u, 42u, 43u, 44u}) {
        const Graph g = reachable_digraph(16, 0.3, -3, 8, seed);
        const PairReplacement rep = replacement_paths_pair(g, 0, g.n - 1);
        for (std::size_t k = 0; k < rep.path.edge_ids.size(); ++k)
            CHECK(rep.d[k] == brute_dist(g, 0, g.n - 1, {rep.path.edge_ids[k]}));
    }
}

TEST_CASE("targeted replacement tables answer every tree-edge fault") {
    for (std::uint64_t seed : {51u, 52u, 53u}) {
        const Graph g = reachable_digraph(14, 0.35, -2, 7, seed);
        const GraphView view(g);
        std::vector<VertexId> targets;
        for (VertexId v = 0; v < g.n; v += 2) targets.push_back(v);
        const SsrpResult r = ssrp_targets(view, 0, targets);
        CHECK(r.s == 0);
        for (VertexId tv : targets) {
            CHECK(r.is_target[static_cast<std::size_t>(tv)] != 0);
            for (EdgeId e = 0; e < g.m(); ++e)
                CHECK(r.query_dist(tv, e) == brute_dist(g, 0, tv, {e}));
        }
    }
}

TEST_CASE("non-targets are refused") {
    const Graph g = cex_graph();
    const SsrpResult r = ssrp_targets(GraphView(g), 0, {5});
    CHECK(r.query_dist(5, 0) == 2);
    CHECK_THROWS_AS(r.query_dist(3, 0), FrpError);
}

TEST_CASE("table rows exist exactly for tree-path edges of targets") {
    const Graph g = cex_graph();
    const SsrpResult r = ssrp_targets(GraphView(g), 0, {5});
    // The canonical tree path to 5 is the designated chain, edges 0..4.
    for (EdgeId e = 0; e < 5; ++e) CHECK(r.table.count({5, e}) == 1);
    for (EdgeId e = 5; e < 9; ++e) CHECK(r.table.count({5, e}) == 0);
}

TEST_CASE("masked views carry through the replacement search") {
    const Graph g = cex_graph();
    // With the direct chain cut at 1 -> 2, the tree route to 5 goes 0 -> 3 -> 4 -> 5.
    const GraphView view(g, {1});
    const SsrpResult r = ssrp_targets(view, 0, {5});
    CHECK(r.tree.dist[5] == 2);
    CHECK(r.query_dist(5, 3) == brute_dist(g, 0, 5, {1, 3}));
    CHECK(r.query_dist(5, 4) == brute_dist(g, 0, 5, {1, 4}));
}
