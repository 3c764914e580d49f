#include "frp/bounded.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "frp/frp2.hpp"

namespace frp {

IntervalPartition make_intervals(const PathSeq& pi, std::int32_t g) {
    if (g < 1) fail(Err::BadParams, "interval size must be positive");
    IntervalPartition part;
    part.g = g;
    const std::int32_t ne = pi.h() - 1;
    part.of_edge.assign(static_cast<std::size_t>(std::max(ne, 0)), -1);
    for (std::int32_t lo = 0; lo < ne; lo += g) {
        const std::int32_t hi = std::min(lo + g, ne);
        const std::int32_t idx = part.count();
        part.intervals.push_back({lo, hi});
        for (std::int32_t k = lo; k < hi; ++k) part.of_edge[static_cast<std::size_t>(k)] = idx;
    }
    return part;
}

namespace {

std::vector<VertexId> with_extras(const std::set<VertexId>& vs,
                                  std::initializer_list<VertexId> extra) {
    std::set<VertexId> all = vs;
    for (VertexId v : extra) all.insert(v);
    return {all.begin(), all.end()};
}

void bump_max(std::atomic<std::uint64_t>& m, std::uint64_t v) {
    std::uint64_t cur = m.load(std::memory_order_relaxed);
    while (cur < v && !m.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

}  // namespace

// Small per-query graph: original vertex ids map to dense aux ids on first
// use; INF weights and self-loops are dropped at the door. Every add() is one
// precomputed-table read, counted whether or not the edge materializes.
// Every finite weight is the length of a real walk between its endpoints in
// (a subgraph of) the base graph, oriented per rev_orient, so the base
// potentials transfer and the build needs no negative-cycle scan.
struct BoundedDso::AuxBuild {
    const Graph* base;
    bool rev_orient;
    std::map<VertexId, VertexId> id;
    std::vector<VertexId> orig;  // aux id -> original id
    std::vector<Edge> edges;
    std::uint64_t lookups = 0;

    AuxBuild(const Graph& b, bool rev) : base(&b), rev_orient(rev) {}

    VertexId get(VertexId o) {
        auto it = id.find(o);
        if (it == id.end()) {
            it = id.emplace(o, static_cast<VertexId>(id.size())).first;
            orig.push_back(o);
        }
        return it->second;
    }

    void add(VertexId uo, VertexId vo, Dist w) {
        ++lookups;
        if (is_inf(w)) return;
        const VertexId u = get(uo), v = get(vo);
        if (u == v) return;
        edges.push_back({u, v, w});
    }

    Dist run(const BoundedDso& d, VertexId sOrig, VertexId tOrig) {
        const VertexId sa = get(sOrig), ta = get(tOrig);
        std::vector<Weight> phi(orig.size());
        for (std::size_t i = 0; i < orig.size(); ++i) {
            const Weight p = base->phi[static_cast<std::size_t>(orig[i])];
            phi[i] = rev_orient ? -p : p;
        }
        const Graph aux = make_graph(static_cast<std::int32_t>(id.size()), edges, std::move(phi));
        const SsspResult r = sssp(aux, sa);
        d.counters_->aux_edges_last.store(edges.size(), std::memory_order_relaxed);
        bump_max(d.counters_->aux_edges_max, edges.size());
        d.counters_->lookups_last.store(lookups, std::memory_order_relaxed);
        bump_max(d.counters_->lookups_max, lookups);
        return r.dist[static_cast<std::size_t>(ta)];
    }
};

BoundedDso::BoundedDso(const Graph& g, VertexId s, VertexId t, std::int32_t g_param)
    : g_(&g), s_(s), t_(t), pi_(shortest_path(g, s, t)), grev_(reverse(g)) {
    if (g_param < 1) fail(Err::BadParams, "interval size must be positive");
    part_ = make_intervals(pi_, g_param);
    for (std::size_t k = 0; k < pi_.edge_ids.size(); ++k)
        eidx_.emplace(pi_.edge_ids[k], static_cast<std::int32_t>(k));

    std::vector<VertexId> all(static_cast<std::size_t>(g.n));
    std::iota(all.begin(), all.end(), 0);
    sssp_s_ = sssp(g, s);
    ssrp_s_ = ssrp_targets(GraphView(g), s, all);
    sssp_t_ = sssp(grev_, t);
    ssrp_t_ = ssrp_targets(GraphView(grev_), t, all);

    off_ = apsp_off_path(g, pi_);
    dso_off_ = std::make_unique<Dso>(GraphView(g, pi_.edge_ids));
    f_ = compute_f_dp(g, pi_, off_);

    per_.resize(part_.intervals.size());
    for (std::size_t q = 0; q < per_.size(); ++q) {
        const auto& iv = part_.intervals[q];
        PerInterval& p = per_[q];
        p.edge_ids.assign(pi_.edge_ids.begin() + iv.lo, pi_.edge_ids.begin() + iv.hi);
        std::set<VertexId> vs;
        for (std::int32_t k = iv.lo; k <= iv.hi; ++k)
            vs.insert(pi_.verts[static_cast<std::size_t>(k)]);
        const GraphView fwd(g, p.edge_ids);
        const GraphView rev(grev_, p.edge_ids);
        p.from_s = ssrp_targets(fwd, s, with_extras(vs, {t}));
        p.from_t = ssrp_targets(rev, t, with_extras(vs, {s}));
        p.from_r = ssrp_targets(fwd, pi_.verts[static_cast<std::size_t>(iv.hi)],
                                with_extras(vs, {s, t}));
        p.from_l = ssrp_targets(rev, pi_.verts[static_cast<std::size_t>(iv.lo)],
                                with_extras(vs, {s, t}));
    }
}

std::int32_t BoundedDso::edge_pos(EdgeId e) const {
    const auto it = eidx_.find(e);
    return it == eidx_.end() ? -1 : it->second;
}

Dist BoundedDso::query_one_off(EdgeId e1, EdgeId e2) const {
    if (edge_pos(e1) < 0) std::swap(e1, e2);
    const std::int32_t p1 = edge_pos(e1);
    if (p1 < 0 || edge_pos(e2) >= 0)
        fail(Err::WrongCase, "expects one fault on the path and one off it");
    const auto& iv = part_.intervals[static_cast<std::size_t>(part_.of_edge[p1])];
    const PerInterval& per = per_[static_cast<std::size_t>(part_.of_edge[p1])];

    AuxBuild b(*g_, false);
    b.get(s_);
    b.get(t_);
    b.add(s_, t_, per.from_s.query_dist(t_, e2));
    for (std::int32_t k = iv.lo; k <= iv.hi; ++k) {
        const VertexId v = pi_.verts[static_cast<std::size_t>(k)];
        b.add(s_, v, per.from_s.query_dist(v, e2));
        b.add(v, t_, per.from_t.query_dist(v, e2));
    }
    for (std::int32_t k = iv.lo; k < iv.hi; ++k) {
        const EdgeId pe = pi_.edge_ids[static_cast<std::size_t>(k)];
        if (pe == e1) continue;
        b.add(pi_.verts[static_cast<std::size_t>(k)], pi_.verts[static_cast<std::size_t>(k + 1)],
              g_->edges[static_cast<std::size_t>(pe)].w);
    }
    for (std::int32_t ku = iv.lo; ku <= iv.hi; ++ku) {
        for (std::int32_t kv = iv.lo; kv <= iv.hi; ++kv) {
            if (ku == kv) continue;
            const VertexId u = pi_.verts[static_cast<std::size_t>(ku)];
            const VertexId v = pi_.verts[static_cast<std::size_t>(kv)];
            b.add(u, v, dso_off_->query(u, v, e2));
        }
    }
    return b.run(*this, s_, t_);
}

Dist BoundedDso::query_same_interval(EdgeId e1, EdgeId e2) const {
    const std::int32_t p1 = edge_pos(e1), p2 = edge_pos(e2);
    if (e1 == e2 || p1 < 0 || p2 < 0 ||
        part_.of_edge[static_cast<std::size_t>(p1)] != part_.of_edge[static_cast<std::size_t>(p2)])
        fail(Err::WrongCase, "expects two distinct faults inside one interval");
    const auto& iv = part_.intervals[static_cast<std::size_t>(part_.of_edge[p1])];
    const PerInterval& per = per_[static_cast<std::size_t>(part_.of_edge[p1])];

    AuxBuild b(*g_, false);
    b.get(s_);
    b.get(t_);
    b.add(s_, t_, per.from_s.tree.dist[static_cast<std::size_t>(t_)]);
    for (std::int32_t k = iv.lo; k <= iv.hi; ++k) {
        const VertexId v = pi_.verts[static_cast<std::size_t>(k)];
        b.add(s_, v, per.from_s.tree.dist[static_cast<std::size_t>(v)]);
        b.add(v, t_, per.from_t.tree.dist[static_cast<std::size_t>(v)]);
    }
    for (std::int32_t k = iv.lo; k < iv.hi; ++k) {
        const EdgeId pe = pi_.edge_ids[static_cast<std::size_t>(k)];
        if (pe == e1 || pe == e2) continue;
        b.add(pi_.verts[static_cast<std::size_t>(k)], pi_.verts[static_cast<std::size_t>(k + 1)],
              g_->edges[static_cast<std::size_t>(pe)].w);
    }
    for (std::int32_t ku = iv.lo; ku <= iv.hi; ++ku) {
        for (std::int32_t kv = iv.lo; kv <= iv.hi; ++kv) {
            if (ku == kv) continue;
            const VertexId u = pi_.verts[static_cast<std::size_t>(ku)];
            const VertexId v = pi_.verts[static_cast<std::size_t>(kv)];
            b.add(u, v, off_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        }
    }
    return b.run(*this, s_, t_);
}

Dist BoundedDso::diff_one_orientation(std::int32_t a, std::int32_t bpos, bool rev) const {
    // Side 1 sits next to the oriented source, side 2 next to the sink. In
    // the reversed run the later fault plays side 1 and all lookups flip to
    // their mirrored precomputation.
    const std::int32_t pa = rev ? bpos : a;
    const std::int32_t pb = rev ? a : bpos;
    const EdgeId eA = pi_.edge_ids[static_cast<std::size_t>(pa)];
    const EdgeId eB = pi_.edge_ids[static_cast<std::size_t>(pb)];
    const auto& ivA = part_.intervals[static_cast<std::size_t>(part_.of_edge[pa])];
    const auto& ivB = part_.intervals[static_cast<std::size_t>(part_.of_edge[pb])];
    const PerInterval& perA = per_[static_cast<std::size_t>(part_.of_edge[pa])];
    const PerInterval& perB = per_[static_cast<std::size_t>(part_.of_edge[pb])];
    const VertexId S = rev ? t_ : s_;
    const VertexId T = rev ? s_ : t_;
    const Dist total = pi_.length();
    auto vat = [&](std::int32_t k) { return pi_.verts[static_cast<std::size_t>(k)]; };

    auto src_side1 = [&](VertexId v) {
        return rev ? perA.from_t.query_dist(v, eB) : perA.from_s.query_dist(v, eB);
    };
    auto sink_side1 = [&](VertexId v) {
        return rev ? perA.from_s.query_dist(v, eB) : perA.from_t.query_dist(v, eB);
    };
    auto src_side2 = [&](VertexId v) {
        return rev ? perB.from_t.query_dist(v, eA) : perB.from_s.query_dist(v, eA);
    };
    auto sink_side2 = [&](VertexId v) {
        return rev ? perB.from_s.query_dist(v, eA) : perB.from_t.query_dist(v, eA);
    };

    // Vertex groups in original positions: R1 is side 1 beyond its fault,
    // L2 is side 2 before its fault (both in oriented walking order).
    struct Range {
        std::int32_t lo, hi;
    };
    const Range R1 = rev ? Range{ivA.lo, pa} : Range{pa + 1, ivA.hi};
    const Range L2 = rev ? Range{pb + 1, ivB.hi} : Range{ivB.lo, pb};
    const VertexId l1 = vat(rev ? ivA.hi : ivA.lo);
    const VertexId r1 = vat(rev ? ivA.lo : ivA.hi);
    const VertexId l2 = vat(rev ? ivB.hi : ivB.lo);
    const VertexId r2 = vat(rev ? ivB.lo : ivB.hi);

    AuxBuild b(*g_, rev);
    b.get(S);
    b.get(T);

    // 1. the answer when the replacement dodges a whole fault interval
    b.add(S, T, dmin(src_side1(T), src_side2(T)));
    // 2. surviving interval edges, oriented
    auto interval_edges = [&](const IntervalPartition::Interval& iv, EdgeId skip) {
        for (std::int32_t k = iv.lo; k < iv.hi; ++k) {
            const EdgeId pe = pi_.edge_ids[static_cast<std::size_t>(k)];
            if (pe == skip) continue;
            const Edge& ed = rev ? grev_.edges[static_cast<std::size_t>(pe)]
                                 : g_->edges[static_cast<std::size_t>(pe)];
            b.add(ed.tail, ed.head, ed.w);
        }
    };
    interval_edges(ivA, eA);
    interval_edges(ivB, eB);
    // 3. boundary stitches along the original path
    b.add(S, l1, rev ? total - pi_.prefix[static_cast<std::size_t>(ivA.hi)]
                     : pi_.prefix[static_cast<std::size_t>(ivA.lo)]);
    b.add(r2, T, rev ? pi_.prefix[static_cast<std::size_t>(ivB.lo)]
                     : total - pi_.prefix[static_cast<std::size_t>(ivB.hi)]);
    b.add(r1, l2, rev ? pi_.prefix[static_cast<std::size_t>(ivA.lo)] -
                            pi_.prefix[static_cast<std::size_t>(ivB.hi)]
                      : pi_.prefix[static_cast<std::size_t>(ivB.lo)] -
                            pi_.prefix[static_cast<std::size_t>(ivA.hi)]);
    // 4-5. source/sink legs that dodge one interval and the other fault
    for (std::int32_t k = ivA.lo; k <= ivA.hi; ++k) {
        b.add(S, vat(k), src_side1(vat(k)));
        b.add(vat(k), T, sink_side1(vat(k)));
    }
    for (std::int32_t k = ivB.lo; k <= ivB.hi; ++k) {
        b.add(S, vat(k), src_side2(vat(k)));
        b.add(vat(k), T, sink_side2(vat(k)));
    }
    // 6. backward jumps from the near side of fault 2 to the far side of
    // fault 1
    for (std::int32_t kx = L2.lo; kx <= L2.hi; ++kx) {
        for (std::int32_t ky = R1.lo; ky <= R1.hi; ++ky) {
            const Dist w = rev ? f_.at(ky, kx) : f_.at(kx, ky);
            b.add(vat(kx), vat(ky), w);
        }
    }
    // 7. hops from side 1's far boundary into its far group
    for (std::int32_t k = R1.lo; k <= R1.hi; ++k) {
        const Dist w = rev ? perA.from_l.query_dist(vat(k), eB) : perA.from_r.query_dist(vat(k), eB);
        b.add(r1, vat(k), w);
    }
    // 8. hops from side 2's near group to its near boundary
    for (std::int32_t k = L2.lo; k <= L2.hi; ++k) {
        const Dist w = rev ? perB.from_r.query_dist(vat(k), eA) : perB.from_l.query_dist(vat(k), eA);
        b.add(vat(k), l2, w);
    }
    // 9. free movement off the path between any two participants
    std::set<VertexId> members{S, T};
    for (std::int32_t k = ivA.lo; k <= ivA.hi; ++k) members.insert(vat(k));
    for (std::int32_t k = ivB.lo; k <= ivB.hi; ++k) members.insert(vat(k));
    for (VertexId u : members) {
        for (VertexId v : members) {
            if (u == v) continue;
            const Dist w = rev ? off_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]
                               : off_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            b.add(u, v, w);
        }
    }

    return b.run(*this, S, T);
}

Dist BoundedDso::query_diff_intervals(EdgeId e1, EdgeId e2) const {
    const std::int32_t p1 = edge_pos(e1), p2 = edge_pos(e2);
    if (p1 < 0 || p2 < 0 ||
        part_.of_edge[static_cast<std::size_t>(p1)] == part_.of_edge[static_cast<std::size_t>(p2)])
        fail(Err::WrongCase, "expects faults in two different intervals");
    std::int32_t a = p1, b = p2;
    if (a > b) std::swap(a, b);
    return std::min(diff_one_orientation(a, b, false), diff_one_orientation(a, b, true));
}

std::pair<Dist, SolveCase> BoundedDso::query_case(EdgeId e1, EdgeId e2) const {
    if (e1 < 0 || e1 >= g_->m() || e2 < 0 || e2 >= g_->m())
        fail(Err::UnknownEdgeId, "fault id out of range");
    if (e1 == e2) fail(Err::BadParams, "faults must be distinct");
    counters_->queries.fetch_add(1, std::memory_order_relaxed);
    const std::int32_t p1 = edge_pos(e1), p2 = edge_pos(e2);
    if (p1 < 0 && p2 < 0) return {sssp_s_.dist[static_cast<std::size_t>(t_)], SolveCase::Trivial};
    if (p1 < 0) return {query_one_off(e2, e1), SolveCase::OneOff};
    if (p2 < 0) return {query_one_off(e1, e2), SolveCase::OneOff};
    if (part_.of_edge[static_cast<std::size_t>(p1)] ==
        part_.of_edge[static_cast<std::size_t>(p2)])
        return {query_same_interval(e1, e2), SolveCase::SameInterval};
    std::int32_t a = p1, b = p2;
    if (a > b) std::swap(a, b);
    const Dist dg = diff_one_orientation(a, b, false);
    const Dist dr = diff_one_orientation(a, b, true);
    if (dg <= dr) return {dg, SolveCase::DiffGood};
    return {dr, SolveCase::DiffReverse};
}

Dist BoundedDso::query(EdgeId e1, EdgeId e2) const { return query_case(e1, e2).first; }

BoundedDso::Stats BoundedDso::stats() const {
    Stats s;
    s.queries = counters_->queries.load(std::memory_order_relaxed);
    s.aux_edges_last = counters_->aux_edges_last.load(std::memory_order_relaxed);
    s.aux_edges_max = counters_->aux_edges_max.load(std::memory_order_relaxed);
    s.lookups_last = counters_->lookups_last.load(std::memory_order_relaxed);
    s.lookups_max = counters_->lookups_max.load(std::memory_order_relaxed);
    return s;
}

BoundedDso precompute(const Graph& g, VertexId s, VertexId t, std::int32_t g_param) {
    return BoundedDso(g, s, t, g_param);
}

TwoFaultTable two_frp_bounded(const Graph& g, VertexId s, VertexId t, Weight M,
                              std::int32_t g_param) {
    if (M < 1) fail(Err::BadParams, "weight bound must be positive");
    for (const Edge& e : g.edges)
        if (e.w > M || e.w < -M)
            fail(Err::WeightOutOfRange, "edge weight exceeds the stated bound");
    std::int32_t gp = g_param;
    if (gp <= 0)
        gp = std::max<std::int32_t>(
            1, static_cast<std::int32_t>(std::llround(std::pow(static_cast<double>(g.n), 2.0 / 3.0))));
    const BoundedDso dso(g, s, t, gp);

    TwoFaultTable tbl;
    tbl.s = s;
    tbl.t = t;
    tbl.path = dso.path();
    for (const auto& [e1, e2] : enumerate_query_pairs(g, s, t)) {
        if (tbl.find(e1, e2)) continue;
        const auto [d, c] = dso.query_case(e1, e2);
        tbl.put(e1, e2, d, c);
        if (dso.path().on_edge[static_cast<std::size_t>(e2)]) tbl.put(e2, e1, d, c);
    }
    return tbl;
}

}  // namespace frp
