#include <doctest.h>

#include "frp/backwards.hpp"
#include "frp/gen.hpp"
#include "frp/oracle.hpp"

#include "fixtures.hpp"

using namespace frp;
using namespace frptest;

namespace {

void check_tables_equal(const FTable& got, const FTable& want) {
    REQUIRE(got.h == want.h);
    for (std::int32_t j = 0; j < got.h; ++j)
        for (std::int32_t i = 0; i < j; ++i) CHECK(got.at(j, i) == want.at(j, i));
}

}  // namespace

TEST_CASE("all-pairs distances match brute per pair") {
    const Graph g = gen_digraph(12, 0.35, -3, 7, 81);
    const DistMatrix d = apsp(GraphView(g));
    for (VertexId u = 0; u < g.n; u += 3)
        for (VertexId v = 0; v < g.n; ++v)
            CHECK(d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
                  brute_dist(g, u, v));
}

TEST_CASE("off-path matrix equals all-pairs on the masked view") {
    const Graph g = reachable_digraph(13, 0.35, -2, 7, 82);
    const PathSeq pi = shortest_path(g, 0, g.n - 1);
    const DistMatrix off = apsp_off_path(g, pi);
    const DistMatrix want = apsp(GraphView(g, pi.edge_ids));
    REQUIRE(off.size() == want.size());
    for (std::size_t u = 0; u < off.size(); ++u)
        for (std::size_t v = 0; v < off.size(); ++v) CHECK(off[u][v] == want[u][v]);
}

TEST_CASE("backward-jump recurrence matches the reference table") {
    const Graph cex = cex_graph();
    const PathSeq pic = shortest_path(cex, 0, 5);
    check_tables_equal(compute_f_dp(cex, pic, apsp_off_path(cex, pic)), brute_f_table(cex, pic));

    for (std::uint64_t seed : {83u, 84u, 85u, 86u}) {
        const Graph g = reachable_digraph(15, 0.35, -3, 8, seed);
        const PathSeq pi = shortest_path(g, 0, g.n - 1);
        check_tables_equal(compute_f_dp(g, pi, apsp_off_path(g, pi)), brute_f_table(g, pi));
    }
}

TEST_CASE("recurrence witnesses reproduce their own values") {
    const Graph g = reachable_digraph(16, 0.4, -3, 8, 87);
    const PathSeq pi = shortest_path(g, 0, g.n - 1);
    const DistMatrix off = apsp_off_path(g, pi);
    const FTable f = compute_f_dp(g, pi, off);
    REQUIRE(f.has_witness());
    const std::size_t h = static_cast<std::size_t>(f.h);
    for (std::int32_t j = 0; j < f.h; ++j)
        for (std::int32_t i = 0; i < j; ++i) {
            if (is_inf(f.at(j, i))) continue;
            const std::size_t cell = static_cast<std::size_t>(j) * h + static_cast<std::size_t>(i);
            const std::int32_t a = f.wa[cell], b = f.wb[cell];
            const Dist dji =
                off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(j)])]
                   [static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(i)])];
            if (a < 0) {
                CHECK(f.at(j, i) == dji);
            } else {
                REQUIRE(i < a);
                REQUIRE(a < b);
                REQUIRE(b < j);
                const Dist mid =
                    off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(b)])]
                       [static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(i)])];
                CHECK(f.at(j, i) == dadd(f.at(j, a), dadd(pi.along(a, b), mid)));
            }
        }
}

TEST_CASE("truncation drops exactly the out-of-band cells") {
    const Graph g = reachable_digraph(14, 0.4, -3, 8, 88);
    const PathSeq pi = shortest_path(g, 0, g.n - 1);
    const DistMatrix off = apsp_off_path(g, pi);
    const FTable t = truncate_off_table(off, pi, 5);
    for (std::int32_t j = 0; j < t.h; ++j)
        for (std::int32_t i = 0; i < t.h; ++i) {
            if (j <= i) {
                CHECK(is_inf(t.at(j, i)));
                continue;
            }
            const Dist d =
                off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(j)])]
                   [static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(i)])];
            if (!is_inf(d) && d <= 5 && d >= -5)
                CHECK(t.at(j, i) == d);
            else
                CHECK(is_inf(t.at(j, i)));
        }
}

TEST_CASE("the base table is the direct-edge table") {
    const Graph g = cex_graph();
    const PathSeq pi = shortest_path(g, 0, 5);
    const HopBoundedF base = base_hop_table(g, pi, 2);
    CHECK(base.ell == 2);
    check_tables_equal(base.table, brute_hop_bounded_f(g, pi, 2));
}

TEST_CASE("rounds stay above f and are exact within their hop budget") {
    for (std::uint64_t seed : {91u, 92u, 93u}) {
        const Graph g = reachable_digraph(14, 0.4, -2, 4, seed);
        const PathSeq pi = shortest_path(g, 0, g.n - 1);
        const Weight M = 4;
        const DistMatrix off = apsp_off_path(g, pi);
        const FTable f = compute_f_dp(g, pi, off);

        HopBoundedF cur = base_hop_table(g, pi, M);
        const std::int32_t ell2 = (3 * cur.ell + 1) / 2;
        SUBCASE("short round") {
            const HopBoundedF nxt =
                hop_short_round(cur, truncate_off_table(off, pi, static_cast<Dist>(ell2) * M), pi, M);
            CHECK(nxt.ell == ell2);
            const FTable hop = brute_hop_bounded_f(g, pi, ell2);
            for (std::int32_t j = 0; j < f.h; ++j)
                for (std::int32_t i = 0; i < j; ++i) {
                    CHECK(nxt.table.at(j, i) >= f.at(j, i));
                    if (hop.at(j, i) == f.at(j, i)) CHECK(nxt.table.at(j, i) == f.at(j, i));
                }
        }
        SUBCASE("sampled round") {
            const HopBoundedF nxt = hop_long_round(g, pi, cur, off, M, seed * 1337 + 1);
            CHECK(nxt.ell == ell2);
            for (std::int32_t j = 0; j < f.h; ++j)
                for (std::int32_t i = 0; i < j; ++i) CHECK(nxt.table.at(j, i) >= f.at(j, i));
        }
    }
}

TEST_CASE("the crossover default follows the cube-root rule") {
    CHECK(default_crossover(8, 1) == 2);
    CHECK(default_crossover(1000, 8) == 5);
    CHECK(default_crossover(4, 4) == 1);
    CHECK(default_crossover(2, 40) == 1);
}

TEST_CASE("scaled computation matches the recurrence at every crossover") {
    for (std::uint64_t seed : {101u, 102u, 103u}) {
        const Graph g = reachable_digraph(16, 0.4, -3, 4, seed);
        const PathSeq pi = shortest_path(g, 0, g.n - 1);
        const FTable dp = compute_f_dp(g, pi, apsp_off_path(g, pi));
        ScaledOptions opts;
        opts.retries = 3;
        for (std::int32_t L : {0, 1, g.n}) {
            check_tables_equal(compute_f_scaled(g, pi, 4, L, seed, opts), dp);
        }
    }
}

TEST_CASE("the weight bound is enforced") {
    const Graph g = cex_graph();  // weights up to 2
    const PathSeq pi = shortest_path(g, 0, 5);
    CHECK_THROWS_AS(compute_f_scaled(g, pi, 1, 0, 1), FrpError);
    CHECK_THROWS_AS(compute_f_scaled(g, pi, 0, 0, 1), FrpError);
}

TEST_CASE("traced cells replay to walks of exactly the stored weight") {
    const Graph g = reachable_digraph(14, 0.4, -2, 4, 104);
    const PathSeq pi = shortest_path(g, 0, g.n - 1);
    FScaledTrace trace;
    ScaledOptions opts;
    opts.retries = 3;
    opts.trace = &trace;
    const FTable res = compute_f_scaled(g, pi, 4, 1, 104, opts);
    REQUIRE(!trace.tables.empty());
    const std::int32_t last = static_cast<std::int32_t>(trace.tables.size()) - 1;
    for (std::int32_t j = 0; j < res.h; ++j)
        for (std::int32_t i = 0; i < j; ++i) {
            if (is_inf(res.at(j, i))) {
                CHECK_THROWS_AS(replay_trace_entry(g, pi, trace, last, j, i), FrpError);
                continue;
            }
            const std::vector<EdgeId> walk = replay_trace_entry(g, pi, trace, last, j, i);
            Dist total = 0;
            VertexId at = pi.verts[static_cast<std::size_t>(j)];
            for (EdgeId e : walk) {
                REQUIRE(g.edges[static_cast<std::size_t>(e)].tail == at);
                at = g.edges[static_cast<std::size_t>(e)].head;
                total += g.edges[static_cast<std::size_t>(e)].w;
            }
            CHECK(at == pi.verts[static_cast<std::size_t>(i)]);
            CHECK(total == res.at(j, i));
        }
}

TEST_CASE("decomposition witnesses alternate runs and detours inside the window") {
    for (std::uint64_t seed : {105u, 106u}) {
        const Graph g = reachable_digraph(14, 0.4, -3, 8, seed);
        const PathSeq pi = shortest_path(g, 0, g.n - 1);
        const FTable f = compute_f_dp(g, pi, apsp_off_path(g, pi));
        for (std::int32_t j = 0; j < f.h; ++j)
            for (std::int32_t i = 0; i < j; ++i) {
                if (is_inf(f.at(j, i))) {
                    CHECK_THROWS_AS(decompose_f_witness(g, pi, j, i), FrpError);
                    continue;
                }
                const DecompositionWitness w = decompose_f_witness(g, pi, j, i);
                CHECK(w.length == f.at(j, i));
                CHECK(w.bounds.size() % 2 == 0);
                REQUIRE(w.bounds.size() >= 2);
                CHECK(w.bounds.front() == j);
                CHECK(w.bounds.back() == i);

                // The walk runs p_j -> p_i at the stated weight, avoiding the
                // masked prefix and suffix.
                Dist total = 0;
                VertexId at = pi.verts[static_cast<std::size_t>(j)];
                for (EdgeId e : w.walk) {
                    REQUIRE(g.edges[static_cast<std::size_t>(e)].tail == at);
                    if (pi.on_edge[static_cast<std::size_t>(e)]) {
                        const std::int32_t p = pi.pos[static_cast<std::size_t>(at)];
                        CHECK(p >= i);
                        CHECK(p < j);
                    }
                    at = g.edges[static_cast<std::size_t>(e)].head;
                    total += g.edges[static_cast<std::size_t>(e)].w;
                }
                CHECK(at == pi.verts[static_cast<std::size_t>(i)]);
                CHECK(total == w.length);

                // Interior bound pairs are on-path runs inside the window.
                for (std::size_t q = 1; q + 1 < w.bounds.size(); q += 2) {
                    CHECK(w.bounds[q] >= i);
                    CHECK(w.bounds[q + 1] <= j);
                    CHECK(w.bounds[q] < w.bounds[q + 1]);
                }
            }
    }
}
