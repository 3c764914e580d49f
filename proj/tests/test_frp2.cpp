#include <doctest.h>

#include <algorithm>
#include <set>

#include "frp/frp2.hpp"
#include "frp/gen.hpp"
#include "frp/oracle.hpp"

#include "fixtures.hpp"

using namespace frp;
using namespace frptest;

TEST_CASE("query pairs follow the canonical replacement paths") {
    const Graph g = cex_graph();
    const auto pairs = enumerate_query_pairs(g, 0, 5);
    std::set<std::pair<EdgeId, EdgeId>> got(pairs.begin(), pairs.end());

    // Replacements: edges 0 and 1 reroute through 0 -> 3 -> 4 -> 5 (edges 5, 3, 4);
    // edges 2, 3, 4 reroute through 0 -> 1 -> 2 -> 5 (edges 0, 1, 6). The second
    // tie at vertex 5 resolves toward the smaller parent, vertex 2.
    std::set<std::pair<EdgeId, EdgeId>> want;
    for (EdgeId e1 : {0, 1})
        for (EdgeId e2 : {5, 3, 4}) want.emplace(e1, e2);
    for (EdgeId e1 : {2, 3, 4})
        for (EdgeId e2 : {0, 1, 6}) want.emplace(e1, e2);
    CHECK(got == want);
}

TEST_CASE("bridge faults pair with nothing") {
    const Graph g = make_graph(4, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 2, 9}});
    // Removing (2,3) disconnects t entirely; removing (0,1) or (1,2) reroutes.
    const auto pairs = enumerate_query_pairs(g, 0, 3);
    for (const auto& [e1, e2] : pairs) {
        CHECK(e1 != 2);
        (void)e2;
    }
    CHECK(!pairs.empty());
}

TEST_CASE("the through-cost grid answers window-avoiding queries") {
    const Graph g = cex_graph();
    const PathSeq pi = shortest_path(g, 0, 5);
    const DistMatrix off = apsp_off_path(g, pi);
    const AvoidMiddleTables tabs = build_avoid_middle(pi, off);

    // Faults at path edges 0 and 4: any avoiding route must leave at position
    // 0 and re-enter at 5; the only off-path 0 -> 5 route is the heavy chain.
    const GridHit hit = avoid_middle_hit(tabs, pi, 0, 4);
    CHECK(is_inf(hit.value));  // no off-path jump from 0 reaches 5 directly

    // Faults at edges 1 and 2: leaving at 0 via the 0 -> 3 jump and re-entering
    // at 3 costs 2 and skips the window.
    const GridHit inner = avoid_middle_hit(tabs, pi, 1, 2);
    CHECK(inner.value == 2);
    CHECK(inner.x == 0);
    CHECK(inner.y == 3);

    const DistMatrix grid = solve_avoid_middle(pi, off);
    CHECK(grid[1][2] == 2);
    CHECK(is_inf(grid[0][4]));
}

TEST_CASE("middle-using values combine approach, jump, and exit legs") {
    const Graph g = cex_graph();
    const PathSeq pi = shortest_path(g, 0, 5);
    const DistMatrix off = apsp_off_path(g, pi);
    const FTable f = compute_f_dp(g, pi, apsp_off_path(g, pi));
    const MiddleCaseTables tabs = build_middle_case(pi, off, f);

    // g_s(0, k): the only way past failed edge 0 is the 0 -> 3 jump, so any
    // re-entry at y <= k works for k >= 3 at cost 2.
    CHECK(g_s_value(tabs, pi, 0, 3) == 2);
    CHECK(g_s_value(tabs, pi, 0, 4) == 2);
    CHECK(is_inf(g_s_value(tabs, pi, 0, 2)));

    // g_t(4, kp): past failed edge 4, exit via 2 -> 5 from any kp <= 2.
    CHECK(g_t_value(tabs, pi, 4, 2) == 2);
    CHECK(g_t_value(tabs, pi, 4, 1) == 2);
    CHECK(is_inf(g_t_value(tabs, pi, 4, 3)));

    // Faults 0 and 4 force the backward jump through f(4, 1) = 2:
    // approach 2 (0 -> 3 -> 4), jump 2 (4 -> 1), exit 2 (1 -> 2 -> 5).
    const DistMatrix uses = solve_uses_middle(pi, f, off);
    CHECK(uses[0][4] == 6);
}

TEST_CASE("a bare path has no middle-using routes") {
    const Graph g = gen_path_plus(8, 0, 7);
    const PathSeq pi = shortest_path(g, 0, 7);
    const DistMatrix off = apsp_off_path(g, pi);
    const FTable f = compute_f_dp(g, pi, off);
    const DistMatrix uses = solve_uses_middle(pi, f, off);
    for (const auto& row : uses)
        for (Dist v : row) CHECK(is_inf(v));
}

TEST_CASE("subgraph copies renumber but preserve structure") {
    const Graph g = cex_graph();
    const Subgraph sub = make_subgraph(g, {0, 6});
    CHECK(sub.graph.n == g.n);
    CHECK(sub.graph.m() == g.m() - 2);
    CHECK(sub.new_of[0] == -1);
    CHECK(sub.new_of[6] == -1);
    for (EdgeId ne = 0; ne < sub.graph.m(); ++ne) {
        const EdgeId oe = sub.old_of[static_cast<std::size_t>(ne)];
        CHECK(sub.new_of[static_cast<std::size_t>(oe)] == ne);
        CHECK(sub.graph.edges[static_cast<std::size_t>(ne)].w ==
              g.edges[static_cast<std::size_t>(oe)].w);
    }
    CHECK(brute_dist(sub.graph, 0, 5) == brute_dist(g, 0, 5, {0, 6}));
}

TEST_CASE("the solver reproduces every brute entry on the hand-checked instance") {
    const Graph g = cex_graph();
    const TwoFrpSolver solver(g, 0, 5);
    CHECK(solver.path().verts == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    for (std::int32_t a = 0; a < 5; ++a) CHECK(solver.single_fault(a) == 2);

    const TwoFaultTable tbl = solver.table();
    const TwoFaultTable want = brute_two_fault_table(g, 0, 5);
    REQUIRE(tbl.entries.size() == want.entries.size());
    for (const auto& en : want.entries) {
        const auto* got = tbl.find(en.e1, en.e2);
        REQUIRE(got != nullptr);
        CHECK(got->d == en.d);
    }

    const auto* weave = tbl.find(0, 4);
    REQUIRE(weave != nullptr);
    CHECK(weave->d == 6);
    CHECK(weave->solved_by == SolveCase::UsesMiddle);
}

TEST_CASE("table entries come only from the production cases") {
    const Graph g = cex_graph();
    const TwoFaultTable tbl = two_frp(g, 0, 5);
    for (const auto& en : tbl.entries) {
        const bool production = en.solved_by == SolveCase::OneOff ||
                                en.solved_by == SolveCase::AvoidMiddle ||
                                en.solved_by == SolveCase::UsesMiddle;
        CHECK(production);
    }
}

TEST_CASE("queries beyond the enumerated pairs still answer") {
    const Graph g = cex_graph();
    const TwoFrpSolver solver(g, 0, 5);

    // Edge 6 (2 -> 5) is off the path and off the replacement for edge 0, so
    // the answer collapses to the single-fault distance.
    const auto [d, c] = solver.query(0, 6);
    CHECK(d == 2);
    CHECK(c == SolveCase::SameAsSingleFault);

    // Swapped argument order resolves identically.
    const auto [d2, c2] = solver.query(6, 0);
    CHECK(d2 == 2);
    CHECK(c2 == SolveCase::SameAsSingleFault);

    CHECK_THROWS_AS(solver.query(5, 6), FrpError);   // both faults off the path
    CHECK_THROWS_AS(solver.query(0, 0), FrpError);   // not distinct
    CHECK_THROWS_AS(solver.query(0, 42), FrpError);  // unknown id
}

TEST_CASE("reported paths replay their table entries") {
    const Graph g = cex_graph();
    const PathSeq rep = report_path(g, 0, 5, 0, 4);
    CHECK(rep.verts == std::vector<VertexId>{0, 3, 4, 1, 2, 5});
    CHECK(rep.length() == 6);

    const TwoFrpSolver solver(g, 0, 5);
    for (const auto& [e1, e2] : enumerate_query_pairs(g, 0, 5)) {
        const auto [d, c] = solver.query(e1, e2);
        if (is_inf(d)) {
            CHECK_THROWS_AS(solver.report(e1, e2), FrpError);
            continue;
        }
        const PathSeq p = solver.report(e1, e2);
        CHECK(p.length() == d);
        CHECK(p.verts.front() == 0);
        CHECK(p.verts.back() == 5);
        for (EdgeId e : p.edge_ids) {
            CHECK(e != e1);
            CHECK(e != e2);
        }
    }
}

TEST_CASE("solver matches brute across random seeds") {
    for (std::uint64_t seed : {111u, 112u, 113u, 114u, 115u}) {
        const Graph g = reachable_digraph(15, 0.35, -3, 8, seed);
        const TwoFaultTable got = two_frp(g, 0, g.n - 1);
        const TwoFaultTable want = brute_two_fault_table(g, 0, g.n - 1);
        REQUIRE(got.entries.size() == want.entries.size());
        for (const auto& en : want.entries) {
            const auto* other = got.find(en.e1, en.e2);
            REQUIRE(other != nullptr);
            CHECK(other->d == en.d);
        }
    }
}

TEST_CASE("fault tuples cover the enumerated triples exactly") {
    const Graph g = cex_graph();
    const FaultTupleTable tbl = f_frp(g, 0, 5, 3);
    CHECK(tbl.k == 3);
    CHECK(!tbl.entries.empty());
    for (const auto& en : tbl.entries) {
        REQUIRE(en.faults.size() == 3);
        CHECK(en.d == brute_dist(g, 0, 5, en.faults));
    }
    // Prefix paths exist for the empty prefix and every stored branch point.
    CHECK(tbl.prefix_paths.count({}) == 1);
}

TEST_CASE("tuple queries answer arbitrary fault sets within the budget") {
    const Graph g = cex_graph();
    const FaultTupleTable tbl = f_frp(g, 0, 5, 3);

    std::vector<EdgeId> ids(static_cast<std::size_t>(g.m()));
    for (EdgeId e = 0; e < g.m(); ++e) ids[static_cast<std::size_t>(e)] = e;

    auto check_set = [&](const std::vector<EdgeId>& faults) {
        CHECK(tbl.query(faults) == brute_dist(g, 0, 5, faults));
    };
    check_set({});
    for (EdgeId a : ids) check_set({a});
    for (EdgeId a : ids)
        for (EdgeId b : ids)
            if (a < b) check_set({a, b});
    for (EdgeId a : ids)
        for (EdgeId b : ids)
            for (EdgeId c : ids)
                if (a < b && b < c) check_set({a, b, c});

    CHECK_THROWS_AS(tbl.query({0, 1, 2, 3}), FrpError);
}

TEST_CASE("fault tuples match brute on random instances") {
    for (std::uint64_t seed : {121u, 122u}) {
        const Graph g = reachable_digraph(10, 0.4, -2, 6, seed);
        const FaultTupleTable tbl = f_frp(g, 0, g.n - 1, 3);
        for (const auto& en : tbl.entries) CHECK(en.d == brute_dist(g, 0, g.n - 1, en.faults));
    }
}
