// Acceptance sweep: ten self-contained checks, one verdict line each.
// Tolerances and instance classes are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frp/backwards.hpp"
#include "frp/bounded.hpp"
#include "frp/frp2.hpp"
#include "frp/gadget.hpp"
#include "frp/gen.hpp"
#include "frp/graph.hpp"
#include "frp/oracle.hpp"

#include "fixtures.hpp"

using namespace frp;
using namespace frptest;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_edge(const Graph& g, EdgeId e) {
    const Edge& ed = g.edges[static_cast<std::size_t>(e)];
    std::ostringstream s;
    s << "(" << ed.tail << "->" << ed.head << "#" << e << ")";
    return s.str();
}

// The 200-instance regression suite shared by several checks.
struct SuiteGraph {
    Graph g;
    std::uint64_t seed;
};

const std::vector<SuiteGraph>& suite() {
    static const std::vector<SuiteGraph> graphs = [] {
        std::vector<SuiteGraph> out;
        out.reserve(200);
        for (int i = 0; i < 200; ++i) {
            const std::int32_t n = 6 + (i % 35);  // 6..40
            const double p = (i % 2 == 0) ? 0.2 : 0.5;
            const std::uint64_t seed = 10000 + static_cast<std::uint64_t>(i);
            out.push_back({reachable_digraph(n, p, -4, 10, seed), seed});
        }
        return out;
    }();
    return graphs;
}

bool tables_match(const Graph& g, const TwoFaultTable& got, const TwoFaultTable& want,
                  std::string& detail) {
    if (got.entries.size() != want.entries.size()) {
        detail = "entry counts differ: " + std::to_string(got.entries.size()) + " vs " +
                 std::to_string(want.entries.size());
        return false;
    }
    for (const auto& en : want.entries) {
        const auto* other = got.find(en.e1, en.e2);
        if (other == nullptr) {
            detail = "missing pair " + fmt_edge(g, en.e1) + ", " + fmt_edge(g, en.e2);
            return false;
        }
        if (other->d != en.d) {
            detail = "pair " + fmt_edge(g, en.e1) + ", " + fmt_edge(g, en.e2) + ": got " +
                     std::to_string(other->d) + " want " + std::to_string(en.d);
            return false;
        }
    }
    return true;
}

// --- criterion 1: the fixed instance, including the replayed path ----------

bool crit_fixed_instance(std::string& detail) {
    const auto t0 = Clock::now();
    const Graph g = cex_graph();
    const TwoFaultTable tbl = two_frp(g, 0, 5);
    const auto* en = tbl.find(0, 4);  // faults (0,1) and (4,5)
    if (en == nullptr || en->d != 6) {
        detail = "table entry for the fixed fault pair is wrong";
        return false;
    }
    const PathSeq rep = report_path(g, 0, 5, 0, 4);
    if (rep.verts != std::vector<VertexId>{0, 3, 4, 1, 2, 5} || rep.length() != 6) {
        detail = "replayed path differs from the expected weave";
        return false;
    }
    const double secs = seconds_since(t0);
    if (secs >= 1.0) {
        detail = "took " + std::to_string(secs) + "s (budget 1s)";
        return false;
    }
    return true;
}

// --- criterion 2: full two-fault tables against brute on the suite ---------

bool crit_two_fault_suite(std::string& detail) {
    const auto t0 = Clock::now();
    for (const SuiteGraph& sg : suite()) {
        const TwoFaultTable got = two_frp(sg.g, 0, sg.g.n - 1);
        const TwoFaultTable want = brute_two_fault_table(sg.g, 0, sg.g.n - 1);
        if (!tables_match(sg.g, got, want, detail)) {
            detail = "seed " + std::to_string(sg.seed) + ": " + detail;
            return false;
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 300.0) {
        detail = "took " + std::to_string(secs) + "s (budget 300s)";
        return false;
    }
    return true;
}

// --- criterion 3: the backward-jump recurrence against brute ---------------

bool crit_backward_recurrence(std::string& detail) {
    for (const SuiteGraph& sg : suite()) {
        const PathSeq pi = shortest_path(sg.g, 0, sg.g.n - 1);
        const FTable got = compute_f_dp(sg.g, pi, apsp_off_path(sg.g, pi));
        const FTable want = brute_f_table(sg.g, pi);
        for (std::int32_t j = 0; j < got.h; ++j)
            for (std::int32_t i = 0; i < j; ++i)
                if (got.at(j, i) != want.at(j, i)) {
                    detail = "seed " + std::to_string(sg.seed) + ": cell (" + std::to_string(j) +
                             ", " + std::to_string(i) + ")";
                    return false;
                }
    }
    return true;
}

// --- criterion 4: the scaled computation at both crossover extremes --------

bool crit_scaled(std::string& detail) {
    for (int i = 0; i < 20; ++i) {
        const std::int32_t n = 8 + (i * 3) % 33;  // 8..40
        const std::uint64_t seed = 15000 + static_cast<std::uint64_t>(i);
        const Graph g = reachable_digraph(n, 0.4, -4, 4, seed);
        const PathSeq pi = shortest_path(g, 0, g.n - 1);
        const FTable dp = compute_f_dp(g, pi, apsp_off_path(g, pi));
        ScaledOptions opts;
        opts.c = 3.0;
        opts.retries = 3;
        for (const std::int32_t L : {1, g.n, 0}) {
            FTable sc;
            try {
                sc = compute_f_scaled(g, pi, 4, L, seed, opts);
            } catch (const FrpError& e) {
                detail = "seed " + std::to_string(seed) + " L=" + std::to_string(L) +
                         " surfaced: " + e.what();
                return false;
            }
            for (std::int32_t j = 0; j < dp.h; ++j)
                for (std::int32_t i2 = 0; i2 < j; ++i2)
                    if (sc.at(j, i2) != dp.at(j, i2)) {
                        detail = "seed " + std::to_string(seed) + " L=" + std::to_string(L) +
                                 ": cell (" + std::to_string(j) + ", " + std::to_string(i2) + ")";
                        return false;
                    }
        }
    }
    return true;
}

// --- criterion 5: the interval structure across interval sizes -------------

bool crit_bounded(std::string& detail) {
    std::set<SolveCase> seen;
    for (int i = 0; i < 100; ++i) {
        const std::int32_t n = 8 + (i % 33);  // 8..40
        const double p = (i % 2 == 0) ? 0.2 : 0.5;
        const std::uint64_t seed = 20000 + static_cast<std::uint64_t>(i);
        const Graph g = reachable_digraph(n, p, -4, 4, seed);
        const VertexId s = 0, t = g.n - 1;
        const PathSeq pi = shortest_path(g, s, t);
        const std::int32_t h = pi.h();

        // Query set: every enumerated pair, a strided sample of on-path pairs,
        // and a few off-path probes; brute once per pair, reused per g.
        std::vector<std::pair<EdgeId, EdgeId>> qs = enumerate_query_pairs(g, s, t);
        const std::int32_t stride = std::max(1, (h - 1) * (h - 1) / 200);
        std::int32_t c = 0;
        for (std::int32_t a = 0; a + 1 < h; ++a)
            for (std::int32_t b = a + 1; b + 1 < h; ++b)
                if (c++ % stride == 0)
                    qs.emplace_back(pi.edge_ids[static_cast<std::size_t>(a)],
                                    pi.edge_ids[static_cast<std::size_t>(b)]);
        std::vector<EdgeId> off_ids;
        for (EdgeId e = 0; e < g.m() && off_ids.size() < 3; ++e)
            if (!pi.on_edge[static_cast<std::size_t>(e)]) off_ids.push_back(e);
        for (std::size_t a = 0; a < off_ids.size(); ++a)
            for (std::size_t b = a + 1; b < off_ids.size(); ++b)
                qs.emplace_back(off_ids[a], off_ids[b]);
        for (EdgeId off : off_ids) qs.emplace_back(pi.edge_ids[0], off);

        std::vector<Dist> want;
        want.reserve(qs.size());
        for (const auto& [e1, e2] : qs) want.push_back(brute_dist(g, s, t, {e1, e2}));

        const std::int32_t root = static_cast<std::int32_t>(std::ceil(std::sqrt(n)));
        for (const std::int32_t gp : {1, 2, root, (n + 1) / 2, h}) {
            const BoundedDso dso(g, s, t, gp);
            for (std::size_t q = 0; q < qs.size(); ++q) {
                const auto [d, cs] = dso.query_case(qs[q].first, qs[q].second);
                seen.insert(cs);
                if (d != want[q]) {
                    detail = "seed " + std::to_string(seed) + " g=" + std::to_string(gp) +
                             ": pair " + fmt_edge(g, qs[q].first) + ", " +
                             fmt_edge(g, qs[q].second) + " got " + std::to_string(d) + " want " +
                             std::to_string(want[q]);
                    return false;
                }
            }
        }
    }
    const bool diff = seen.count(SolveCase::DiffGood) > 0 || seen.count(SolveCase::DiffReverse) > 0;
    if (!(seen.count(SolveCase::Trivial) && seen.count(SolveCase::OneOff) &&
          seen.count(SolveCase::SameInterval) && diff)) {
        detail = "dispatch coverage incomplete";
        return false;
    }
    return true;
}

// --- criterion 6: fault triples against brute ------------------------------

bool crit_fault_triples(std::string& detail) {
    for (int i = 0; i < 25; ++i) {
        const std::int32_t n = 6 + (i % 13);  // 6..18
        const std::uint64_t seed = 30000 + static_cast<std::uint64_t>(i);
        const Graph g = reachable_digraph(n, 0.4, -3, 8, seed);
        const FaultTupleTable tbl = f_frp(g, 0, g.n - 1, 3);
        for (const auto& en : tbl.entries) {
            const Dist want = brute_dist(g, 0, g.n - 1, en.faults);
            if (en.d != want) {
                detail = "seed " + std::to_string(seed) + ": a triple disagrees (got " +
                         std::to_string(en.d) + " want " + std::to_string(want) + ")";
                return false;
            }
        }
    }
    return true;
}

// --- criterion 7: backbone distance formulas on every probe ----------------

bool crit_backbone_formulas(std::string& detail) {
    const Graph tri = gen_undirected(10, 0.3, 777);
    for (const std::int32_t k : {1, 2, 3}) {
        for (const std::int32_t B : {2, 3}) {
            std::int32_t L = 1;
            for (std::int32_t e = 0; e < k; ++e) L *= B;  // L = B^k, every digit string used
            auto [g, lay] = build_gadget(tri, 0, L, k);
            if (lay.params.base != B) {
                detail = "base mismatch for k=" + std::to_string(k) + " L=" + std::to_string(L);
                return false;
            }
            const GraphView hb(g, lay.adjacency);
            const SsspResult from_s = sssp(hb, lay.s);
            const Graph grev = reverse(g);
            const SsspResult to_t = sssp(GraphView(grev, lay.adjacency), lay.t);
            const Dist hit = expected_hit_length(k, B);
            if (k == 2 && B == 2 && hit != 23) {
                detail = "hit length for k=2 B=2 is " + std::to_string(hit) + ", pinned 23";
                return false;
            }
            if (k == 2 && B == 3 && hit != 39) {
                detail = "hit length for k=2 B=3 is " + std::to_string(hit) + ", pinned 39";
                return false;
            }
            for (std::int64_t w = 0; w < L; ++w) {
                const Dist dq =
                    from_s.dist[static_cast<std::size_t>(lay.q[static_cast<std::size_t>(w)])];
                const Dist dc =
                    to_t.dist[static_cast<std::size_t>(lay.c[static_cast<std::size_t>(w)])];
                if (dq != q_dist_formula(w, k, B) || dc != c_dist_formula(w, k, B)) {
                    detail = "k=" + std::to_string(k) + " B=" + std::to_string(B) +
                             " w=" + std::to_string(w) + ": backbone distance off the closed form";
                    return false;
                }
                if (dq + 3 + dc != hit) {
                    detail = "k=" + std::to_string(k) + " B=" + std::to_string(B) +
                             " w=" + std::to_string(w) + ": probe sum misses the hit length";
                    return false;
                }
            }
        }
    }
    return true;
}

// --- criterion 8: the reduction against brute triangle detection -----------

bool crit_reduction(std::string& detail) {
    for (int i = 0; i < 50; ++i) {
        const std::int32_t n = 6 + (i % 19);  // 6..24
        const std::uint64_t seed = 40000 + static_cast<std::uint64_t>(i);
        const Graph tri = gen_undirected(n, 0.3, seed);
        const bool want = has_triangle_brute(tri);
        for (const std::int32_t k : {1, 2, 3}) {
            const std::int32_t L = std::max<std::int32_t>(
                1, static_cast<std::int32_t>(
                       std::llround(std::pow(n, static_cast<double>(k) / (k + 1.0)))));
            const bool via_brute = triangle_detect_via_queries(tri, k, L, gadget_engine_brute());
            const bool via_tables =
                triangle_detect_via_queries(tri, k, L, gadget_engine_toolkit(k));
            if (via_brute != want || via_tables != want) {
                detail = "seed " + std::to_string(seed) + " k=" + std::to_string(k) +
                         ": verdicts " + std::to_string(via_brute) + "/" +
                         std::to_string(via_tables) + " want " + std::to_string(want);
                return false;
            }
        }
    }
    return true;
}

// --- criterion 9: scaling of the solver, cost bound on the structure -------

bool crit_performance(std::string& detail) {
    const auto t0 = Clock::now();

    std::vector<double> medians;
    std::size_t sink = 0;
    for (const std::int32_t n : {64, 128, 256}) {
        const Graph g =
            reachable_digraph(n, 0.8, -2, 8, 50000 + static_cast<std::uint64_t>(n));
        std::vector<double> runs;
        for (int r = 0; r < 3; ++r) {
            const auto s0 = Clock::now();
            const TwoFaultTable tbl = two_frp(g, 0, n - 1);
            runs.push_back(seconds_since(s0));
            sink += tbl.entries.size();
        }
        std::sort(runs.begin(), runs.end());
        medians.push_back(runs[1]);
    }
    const double slope = std::log(medians[2] / medians[0]) / std::log(256.0 / 64.0);
    if (sink == 0) {
        detail = "solver produced empty tables on the timing instances";
        return false;
    }
    if (!(slope <= 3.5)) {
        detail = "log-log slope " + std::to_string(slope) + " exceeds 3.5";
        return false;
    }

    for (const std::int32_t n : {64, 128}) {
        const Graph g = gen_path_plus(n, 2 * n, 60000 + static_cast<std::uint64_t>(n));
        for (const std::int32_t gp : {2, 4, 8, 16}) {
            const BoundedDso dso(g, 0, n - 1, gp);
            const PathSeq& pi = dso.path();
            for (const auto& [e1, e2] : enumerate_query_pairs(g, 0, n - 1)) dso.query(e1, e2);
            for (std::int32_t a = 0; a + 1 < pi.h(); a += 5)
                for (std::int32_t b = a + 1; b + 1 < pi.h(); b += 5)
                    dso.query(pi.edge_ids[static_cast<std::size_t>(a)],
                              pi.edge_ids[static_cast<std::size_t>(b)]);
            const std::uint64_t bound =
                8ull * static_cast<std::uint64_t>(gp + 2) * static_cast<std::uint64_t>(gp + 2);
            const BoundedDso::Stats st = dso.stats();
            if (st.aux_edges_max > bound) {
                detail = "n=" + std::to_string(n) + " g=" + std::to_string(gp) +
                         ": aux edges " + std::to_string(st.aux_edges_max) + " exceed " +
                         std::to_string(bound);
                return false;
            }
        }
    }

    const double secs = seconds_since(t0);
    if (secs >= 900.0) {
        detail = "took " + std::to_string(secs) + "s (budget 900s)";
        return false;
    }
    return true;
}

// --- criterion 10: reweighting stays consistent on negative instances ------

bool crit_reweighting(std::string& detail) {
    int with_negative = 0;
    for (const SuiteGraph& sg : suite()) {
        bool has_negative = false;
        for (const Edge& e : sg.g.edges) has_negative = has_negative || e.w < 0;
        if (!has_negative) continue;
        ++with_negative;
        for (const Edge& e : sg.g.edges) {
            const Weight reduced = e.w + sg.g.phi[static_cast<std::size_t>(e.tail)] -
                                   sg.g.phi[static_cast<std::size_t>(e.head)];
            if (reduced < 0) {
                detail = "seed " + std::to_string(sg.seed) + ": a reduced weight is negative";
                return false;
            }
        }
        const SsspResult got = sssp(sg.g, 0);
        const std::vector<Dist> want = brute_sssp(GraphView(sg.g), 0);
        for (VertexId v = 0; v < sg.g.n; ++v)
            if (got.dist[static_cast<std::size_t>(v)] != want[static_cast<std::size_t>(v)]) {
                detail = "seed " + std::to_string(sg.seed) + ": distance to " +
                         std::to_string(v) + " differs from the label-correcting run";
                return false;
            }
    }
    if (with_negative == 0) {
        detail = "suite contains no negative-edge instance";
        return false;
    }
    return true;
}

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"fixed instance entry and replayed path (under 1s)", crit_fixed_instance},
        {"two-fault tables match brute on 200 instances (under 5min)", crit_two_fault_suite},
        {"backward-jump recurrence matches brute on the suite", crit_backward_recurrence},
        {"scaled backward tables match the recurrence at every crossover", crit_scaled},
        {"interval structure exact for every interval size, all branches hit", crit_bounded},
        {"fault triples match brute removal exhaustively", crit_fault_triples},
        {"gadget backbone distances follow the closed forms", crit_backbone_formulas},
        {"query reduction agrees with brute triangle detection", crit_reduction},
        {"solver scaling and per-query cost bound (under 15min)", crit_performance},
        {"reweighted instances keep exact negative-weight distances", crit_reweighting},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = seconds_since(t0);
        std::printf("[%2zu] %s  %s (%.1fs)%s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].name,
                    secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures != 0) std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
