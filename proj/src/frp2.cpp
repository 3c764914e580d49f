#include "frp/frp2.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace frp {

namespace {

std::map<EdgeId, std::int32_t> path_edge_index(const PathSeq& pi) {
    std::map<EdgeId, std::int32_t> m;
    for (std::size_t k = 0; k < pi.edge_ids.size(); ++k)
        m.emplace(pi.edge_ids[k], static_cast<std::int32_t>(k));
    return m;
}

// Canonical replacement path for one removed path edge; false when t drops out.
bool replacement_for(const Graph& g, const PathSeq& pi, std::int32_t a, PathSeq& out) {
    GraphView v(g, std::vector<EdgeId>{pi.edge_ids[static_cast<std::size_t>(a)]});
    TieBreak tb{&pi.pos};
    SsspResult r = sssp(v, pi.s(), &tb);
    if (is_inf(r.dist[static_cast<std::size_t>(pi.t())])) return false;
    out = extract_path(v, r, pi.s(), pi.t());
    return true;
}

std::vector<EdgeId> masked_route(const Graph& g, const std::vector<EdgeId>& mask, VertexId u,
                                 VertexId v) {
    GraphView view(g, mask);
    SsspResult r = sssp(view, u);
    if (is_inf(r.dist[static_cast<std::size_t>(v)]))
        fail(Err::VerifyMismatch, "witness leg is unreachable");
    return extract_path(view, r, u, v).edge_ids;
}

std::vector<EdgeId> window_mask(const PathSeq& pi, std::int32_t j, std::int32_t i) {
    std::vector<EdgeId> m;
    for (std::int32_t k = 0; k < i; ++k) m.push_back(pi.edge_ids[static_cast<std::size_t>(k)]);
    for (std::int32_t k = j; k + 1 < pi.h(); ++k)
        m.push_back(pi.edge_ids[static_cast<std::size_t>(k)]);
    return m;
}

// Removes revisit loops (always zero-weight inside an optimal walk) and
// packages the edges as a PathSeq rooted at `start`.
PathSeq walk_to_path(const Graph& g, VertexId start, std::vector<EdgeId> walk) {
    auto verts_of = [&](const std::vector<EdgeId>& w) {
        std::vector<VertexId> vs{start};
        for (EdgeId e : w) vs.push_back(g.edges[static_cast<std::size_t>(e)].head);
        return vs;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<VertexId> vs = verts_of(walk);
        std::map<VertexId, std::size_t> seen;
        for (std::size_t q = 0; q < vs.size() && !changed; ++q) {
            auto it = seen.find(vs[q]);
            if (it != seen.end()) {
                walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(it->second),
                           walk.begin() + static_cast<std::ptrdiff_t>(q));
                changed = true;
            } else {
                seen.emplace(vs[q], q);
            }
        }
    }

    PathSeq p;
    p.verts = verts_of(walk);
    p.edge_ids = std::move(walk);
    p.prefix.assign(p.verts.size(), 0);
    for (std::size_t q = 0; q < p.edge_ids.size(); ++q)
        p.prefix[q + 1] = p.prefix[q] + g.edges[static_cast<std::size_t>(p.edge_ids[q])].w;
    p.pos.assign(static_cast<std::size_t>(g.n), -1);
    for (std::size_t q = 0; q < p.verts.size(); ++q)
        p.pos[static_cast<std::size_t>(p.verts[q])] = static_cast<std::int32_t>(q);
    p.on_edge.assign(g.edges.size(), 0);
    for (EdgeId e : p.edge_ids) p.on_edge[static_cast<std::size_t>(e)] = 1;
    return p;
}

}  // namespace

std::vector<std::pair<EdgeId, EdgeId>> enumerate_query_pairs(const Graph& g, VertexId s,
                                                             VertexId t) {
    const PathSeq pi = shortest_path(g, s, t);
    std::vector<std::pair<EdgeId, EdgeId>> out;
    PathSeq rp;
    for (std::int32_t a = 0; a + 1 < pi.h(); ++a) {
        if (!replacement_for(g, pi, a, rp)) continue;
        for (EdgeId e2 : rp.edge_ids) out.emplace_back(pi.edge_ids[static_cast<std::size_t>(a)], e2);
    }
    return out;
}

AvoidMiddleTables build_avoid_middle(const PathSeq& pi, const DistMatrix& apsp_off) {
    const std::int32_t h = pi.h();
    const Dist total = pi.length();
    std::vector<GridPoint> pts;
    for (std::int32_t x = 0; x < h; ++x) {
        const auto& row = apsp_off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(x)])];
        for (std::int32_t y = x + 1; y < h; ++y) {
            const Dist d = row[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(y)])];
            if (is_inf(d)) continue;
            pts.push_back({x, y, pi.prefix[static_cast<std::size_t>(x)] + d +
                                     (total - pi.prefix[static_cast<std::size_t>(y)])});
        }
    }
    return AvoidMiddleTables{GridMin2D(std::move(pts))};
}

GridHit avoid_middle_hit(const AvoidMiddleTables& tabs, const PathSeq& pi, std::int32_t a,
                         std::int32_t b) {
    if (a < 0 || b <= a || b + 1 >= pi.h()) fail(Err::BadParams, "fault indices out of order");
    return tabs.grid.query(0, a, b + 1, pi.h() - 1);
}

DistMatrix solve_avoid_middle(const PathSeq& pi, const DistMatrix& apsp_off) {
    const std::int32_t ne = pi.h() - 1;
    const AvoidMiddleTables tabs = build_avoid_middle(pi, apsp_off);
    DistMatrix out(static_cast<std::size_t>(std::max(ne, 0)),
                   std::vector<Dist>(static_cast<std::size_t>(std::max(ne, 0)), kInf));
    for (std::int32_t a = 0; a + 1 < ne; ++a)
        for (std::int32_t b = a + 1; b < ne; ++b)
            out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                avoid_middle_hit(tabs, pi, a, b).value;
    return out;
}

MiddleCaseTables build_middle_case(const PathSeq& pi, const DistMatrix& apsp_off, FTable f) {
    const std::int32_t h = pi.h();
    std::vector<GridPoint> pts;
    for (std::int32_t x = 0; x < h; ++x) {
        const auto& row = apsp_off[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(x)])];
        for (std::int32_t y = x + 1; y < h; ++y) {
            const Dist d = row[static_cast<std::size_t>(pi.verts[static_cast<std::size_t>(y)])];
            if (is_inf(d)) continue;
            pts.push_back({x, y, pi.prefix[static_cast<std::size_t>(x)] + d -
                                     pi.prefix[static_cast<std::size_t>(y)]});
        }
    }
    return MiddleCaseTables{GridMin2D(std::move(pts)), std::move(f)};
}

Dist g_s_value(const MiddleCaseTables& tabs, const PathSeq& pi, std::int32_t a, std::int32_t k,
               GridHit* hit) {
    if (a < 0 || k <= a || k >= pi.h()) fail(Err::BadParams, "approach leg indices");
    const GridHit got = tabs.shifted.query(0, a, a + 1, k);
    if (hit) *hit = got;
    if (is_inf(got.value)) return kInf;
    return pi.prefix[static_cast<std::size_t>(k)] + got.value;
}

Dist g_t_value(const MiddleCaseTables& tabs, const PathSeq& pi, std::int32_t b, std::int32_t kp,
               GridHit* hit) {
    if (kp <= 0 || kp > b || b + 1 >= pi.h()) fail(Err::BadParams, "exit leg indices");
    const GridHit got = tabs.shifted.query(kp, b, b + 1, pi.h() - 1);
    if (hit) *hit = got;
    if (is_inf(got.value)) return kInf;
    return (pi.length() - pi.prefix[static_cast<std::size_t>(kp)]) + got.value;
}

namespace {

// A_{k,b}(kp) = f(p_k, p_kp) + g_t(b, kp) for kp in [1, k]; index 0 unused.
std::vector<Rmq1D> middle_arrays(const MiddleCaseTables& tabs, const PathSeq& pi, std::int32_t b) {
    std::vector<Dist> gt(static_cast<std::size_t>(b + 1), kInf);
    for (std::int32_t kp = 1; kp <= b; ++kp) gt[static_cast<std::size_t>(kp)] = g_t_value(tabs, pi, b, kp);
    std::vector<Rmq1D> arrs;
    arrs.reserve(static_cast<std::size_t>(b + 1));
    arrs.emplace_back();  // k = 0 never queried
    for (std::int32_t k = 1; k <= b; ++k) {
        std::vector<Dist> vals(static_cast<std::size_t>(k + 1), kInf);
        for (std::int32_t kp = 1; kp <= k; ++kp) {
            const Dist fe = kp == k ? 0 : tabs.f.at(k, kp);
            vals[static_cast<std::size_t>(kp)] = dadd(fe, gt[static_cast<std::size_t>(kp)]);
        }
        arrs.emplace_back(std::move(vals));
    }
    return arrs;
}

Dist middle_value(const MiddleCaseTables& tabs, const PathSeq& pi, const std::vector<Rmq1D>& arrs,
                  std::int32_t a, std::int32_t b, std::int32_t* arg_k, std::int32_t* arg_kp) {
    Dist best = kInf;
    for (std::int32_t k = a + 1; k <= b; ++k) {
        const Dist gs = g_s_value(tabs, pi, a, k);
        if (is_inf(gs)) continue;
        const auto [mv, marg] = arrs[static_cast<std::size_t>(k)].query(a + 1, k);
        if (is_inf(mv)) continue;
        const Dist cand = gs + mv;
        if (cand < best) {
            best = cand;
            if (arg_k) *arg_k = k;
            if (arg_kp) *arg_kp = marg;
        }
    }
    return best;
}

}  // namespace

DistMatrix solve_uses_middle(const PathSeq& pi, const FTable& f, const DistMatrix& apsp_off) {
    const std::int32_t ne = pi.h() - 1;
    const MiddleCaseTables tabs = build_middle_case(pi, apsp_off, f);
    DistMatrix out(static_cast<std::size_t>(std::max(ne, 0)),
                   std::vector<Dist>(static_cast<std::size_t>(std::max(ne, 0)), kInf));
    for (std::int32_t b = 1; b < ne; ++b) {
        const std::vector<Rmq1D> arrs = middle_arrays(tabs, pi, b);
        for (std::int32_t a = 0; a < b; ++a)
            out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                middle_value(tabs, pi, arrs, a, b, nullptr, nullptr);
    }
    return out;
}

Subgraph make_subgraph(const Graph& g, const std::vector<EdgeId>& removed) {
    std::vector<std::uint8_t> drop(g.edges.size(), 0);
    for (EdgeId e : removed) {
        if (e < 0 || e >= g.m()) fail(Err::UnknownEdgeId, "removed edge id out of range");
        drop[static_cast<std::size_t>(e)] = 1;
    }
    Subgraph out;
    out.new_of.assign(g.edges.size(), -1);
    std::vector<Edge> kept;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (drop[e]) continue;
        out.new_of[e] = static_cast<EdgeId>(kept.size());
        out.old_of.push_back(static_cast<EdgeId>(e));
        kept.push_back(g.edges[e]);
    }
    out.graph = make_graph(g.n, std::move(kept), g.phi);
    return out;
}

TwoFrpSolver::TwoFrpSolver(const Graph& g, VertexId s, VertexId t)
    : g_(&g), s_(s), t_(t), pi_(shortest_path(g, s, t)) {
    eidx_ = path_edge_index(pi_);
    const std::size_t ne = static_cast<std::size_t>(pi_.h() - 1);
    sfd_.assign(ne, kInf);
    rpaths_.resize(ne);
    rok_.assign(ne, 0);
    for (std::size_t a = 0; a < ne; ++a) {
        if (replacement_for(g, pi_, static_cast<std::int32_t>(a), rpaths_[a])) {
            rok_[a] = 1;
            sfd_[a] = rpaths_[a].length();
        }
    }
    off_ = apsp_off_path(g, pi_);
    avoid_ = build_avoid_middle(pi_, off_);
    mid_ = build_middle_case(pi_, off_, compute_f_dp(g, pi_, off_));
    aux_ = build_one_off_aux(g, pi_);
    dso_ = std::make_unique<Dso>(GraphView(aux_.graph));
}

const std::vector<Rmq1D>& TwoFrpSolver::arrays_for(std::int32_t b) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = acache_.find(b);
    if (it == acache_.end()) it = acache_.emplace(b, middle_arrays(mid_, pi_, b)).first;
    return it->second;
}

Dist TwoFrpSolver::uses_middle_value(std::int32_t a, std::int32_t b, std::int32_t* arg_k,
                                     std::int32_t* arg_kp) const {
    return middle_value(mid_, pi_, arrays_for(b), a, b, arg_k, arg_kp);
}

TwoFrpSolver::Resolved TwoFrpSolver::resolve(EdgeId e1, EdgeId e2) const {
    if (e1 < 0 || e1 >= g_->m() || e2 < 0 || e2 >= g_->m())
        fail(Err::UnknownEdgeId, "fault id out of range");
    if (e1 == e2) fail(Err::BadParams, "faults must be distinct");
    bool on1 = pi_.on_edge[static_cast<std::size_t>(e1)] != 0;
    bool on2 = pi_.on_edge[static_cast<std::size_t>(e2)] != 0;
    if (!on1 && on2) {
        std::swap(e1, e2);
        std::swap(on1, on2);
    }
    if (!on1) fail(Err::BadParams, "one fault must lie on the designated path");

    Resolved r;
    const std::int32_t a1 = eidx_.at(e1);
    if (on2) {
        const std::int32_t b1 = eidx_.at(e2);
        r.a = std::min(a1, b1);
        r.b = std::max(a1, b1);
        const GridHit hit = avoid_middle_hit(avoid_, pi_, r.a, r.b);
        const Dist um = uses_middle_value(r.a, r.b, nullptr, nullptr);
        if (hit.value <= um) {
            r.d = hit.value;
            r.c = SolveCase::AvoidMiddle;
        } else {
            r.d = um;
            r.c = SolveCase::UsesMiddle;
        }
        return r;
    }

    r.a = a1;
    r.off = e2;
    const PathSeq* rp = replacement(a1);
    if (rp == nullptr || !rp->on_edge[static_cast<std::size_t>(e2)]) {
        // the single-fault replacement survives the second fault
        r.d = sfd_[static_cast<std::size_t>(a1)];
        r.c = SolveCase::SameAsSingleFault;
        return r;
    }
    r.d = one_off_query(aux_, *dso_, a1 + 1, e2);
    r.c = SolveCase::OneOff;
    return r;
}

std::pair<Dist, SolveCase> TwoFrpSolver::query(EdgeId e1, EdgeId e2) const {
    const Resolved r = resolve(e1, e2);
    return {r.d, r.c};
}

TwoFaultTable TwoFrpSolver::table() const {
    TwoFaultTable tbl;
    tbl.s = s_;
    tbl.t = t_;
    tbl.path = pi_;
    for (std::size_t a = 0; a + 1 < static_cast<std::size_t>(pi_.h()); ++a) {
        if (!rok_[a]) continue;
        const EdgeId e1 = pi_.edge_ids[a];
        for (EdgeId e2 : rpaths_[a].edge_ids) {
            if (tbl.find(e1, e2)) continue;
            const auto [d, c] = query(e1, e2);
            tbl.put(e1, e2, d, c);
            if (pi_.on_edge[static_cast<std::size_t>(e2)]) tbl.put(e2, e1, d, c);
        }
    }
    return tbl;
}

PathSeq TwoFrpSolver::report(EdgeId e1, EdgeId e2) const {
    const Resolved r = resolve(e1, e2);
    if (is_inf(r.d)) fail(Err::NoFiniteEntry, "no replacement path for this pair");
    const std::int32_t h = pi_.h();
    std::vector<EdgeId> walk;
    auto run = [&](std::int32_t from, std::int32_t to) {
        for (std::int32_t k = from; k < to; ++k)
            walk.push_back(pi_.edge_ids[static_cast<std::size_t>(k)]);
    };

    switch (r.c) {
        case SolveCase::SameAsSingleFault:
            walk = rpaths_[static_cast<std::size_t>(r.a)].edge_ids;
            break;
        case SolveCase::OneOff: {
            const EdgeId e2aux = aux_.to_aux[static_cast<std::size_t>(r.off)];
            GraphView view(aux_.graph, std::vector<EdgeId>{e2aux});
            const VertexId src = aux_.a(r.a + 1);
            const VertexId dst = aux_.b(r.a + 2);
            SsspResult sr = sssp(view, src);
            if (is_inf(sr.dist[static_cast<std::size_t>(dst)]))
                fail(Err::VerifyMismatch, "reduction route missing for a finite entry");
            const PathSeq ap = extract_path(view, sr, src, dst);
            for (EdgeId ae : ap.edge_ids) {
                const EdgeId be = aux_.to_base[static_cast<std::size_t>(ae)];
                if (be >= 0) {
                    walk.push_back(be);
                    continue;
                }
                const Edge& ed = aux_.graph.edges[static_cast<std::size_t>(ae)];
                if (ed.tail >= aux_.n0 && ed.tail < aux_.n0 + aux_.h) {
                    // entry connector a_i -> p_x stands for the path prefix
                    run(0, pi_.pos[static_cast<std::size_t>(ed.head)]);
                } else {
                    // exit connector p_y -> b_i stands for the path suffix
                    run(pi_.pos[static_cast<std::size_t>(ed.tail)], h - 1);
                }
            }
            break;
        }
        case SolveCase::AvoidMiddle: {
            const GridHit hit = avoid_middle_hit(avoid_, pi_, r.a, r.b);
            const std::int32_t x = static_cast<std::int32_t>(hit.x);
            const std::int32_t y = static_cast<std::int32_t>(hit.y);
            run(0, x);
            for (EdgeId e : masked_route(*g_, pi_.edge_ids, pi_.verts[static_cast<std::size_t>(x)],
                                         pi_.verts[static_cast<std::size_t>(y)]))
                walk.push_back(e);
            run(y, h - 1);
            break;
        }
        case SolveCase::UsesMiddle: {
            std::int32_t k = -1, kp = -1;
            uses_middle_value(r.a, r.b, &k, &kp);
            GridHit hs, ht;
            g_s_value(mid_, pi_, r.a, k, &hs);
            g_t_value(mid_, pi_, r.b, kp, &ht);
            run(0, static_cast<std::int32_t>(hs.x));
            for (EdgeId e :
                 masked_route(*g_, pi_.edge_ids, pi_.verts[static_cast<std::size_t>(hs.x)],
                              pi_.verts[static_cast<std::size_t>(hs.y)]))
                walk.push_back(e);
            run(static_cast<std::int32_t>(hs.y), k);
            if (k > kp) {
                for (EdgeId e : masked_route(*g_, window_mask(pi_, k, kp),
                                             pi_.verts[static_cast<std::size_t>(k)],
                                             pi_.verts[static_cast<std::size_t>(kp)]))
                    walk.push_back(e);
            }
            run(kp, static_cast<std::int32_t>(ht.x));
            for (EdgeId e :
                 masked_route(*g_, pi_.edge_ids, pi_.verts[static_cast<std::size_t>(ht.x)],
                              pi_.verts[static_cast<std::size_t>(ht.y)]))
                walk.push_back(e);
            run(static_cast<std::int32_t>(ht.y), h - 1);
            break;
        }
        default:
            fail(Err::BadParams, "entry case has no reconstruction");
    }

    PathSeq out = walk_to_path(*g_, s_, std::move(walk));
    for (EdgeId e : out.edge_ids)
        if (e == e1 || e == e2) fail(Err::VerifyMismatch, "reported path uses a failed edge");
    if (out.length() != r.d)
        fail(Err::VerifyMismatch, "reported path length differs from the table entry");
    return out;
}

TwoFaultTable two_frp(const Graph& g, VertexId s, VertexId t) {
    return TwoFrpSolver(g, s, t).table();
}

PathSeq report_path(const Graph& g, VertexId s, VertexId t, EdgeId e1, EdgeId e2) {
    return TwoFrpSolver(g, s, t).report(e1, e2);
}

namespace {

PathSeq translate_path(const Graph& base, const Subgraph& sub, const PathSeq& p) {
    PathSeq out = p;
    out.on_edge.assign(base.edges.size(), 0);
    for (auto& e : out.edge_ids) {
        e = sub.old_of[static_cast<std::size_t>(e)];
        out.on_edge[static_cast<std::size_t>(e)] = 1;
    }
    return out;
}

}  // namespace

Dist FaultTupleTable::query(const std::vector<EdgeId>& faults) const {
    if (static_cast<std::int32_t>(faults.size()) > k)
        fail(Err::BadParams, "fault set exceeds the table budget");
    std::vector<EdgeId> cur;
    while (true) {
        if (static_cast<std::int32_t>(cur.size()) == k) {
            const auto it = index.find(cur);
            if (it == index.end()) fail(Err::VerifyMismatch, "walk left the enumerated tuples");
            return entries[it->second].d;
        }
        const auto it = prefix_paths.find(cur);
        if (it == prefix_paths.end()) return kInf;  // t was unreachable at this prefix
        const PathSeq& p = it->second;
        EdgeId hit = -1;
        for (EdgeId pe : p.edge_ids) {
            if (std::find(faults.begin(), faults.end(), pe) != faults.end()) {
                hit = pe;
                break;
            }
        }
        if (hit < 0) return p.length();  // the stored path survives the whole fault set
        cur.push_back(hit);
    }
}

FaultTupleTable f_frp(const Graph& g, VertexId s, VertexId t, std::int32_t k) {
    if (k < 2) fail(Err::BadParams, "fault budget must be at least 2");
    FaultTupleTable tbl;
    tbl.k = k;
    tbl.s = s;
    tbl.t = t;

    std::vector<EdgeId> cur;
    auto descend = [&](auto&& self) -> void {
        const Subgraph sub = make_subgraph(g, cur);
        if (is_inf(sssp(sub.graph, s).dist[static_cast<std::size_t>(t)])) return;

        if (static_cast<std::int32_t>(cur.size()) == k - 2) {
            const TwoFrpSolver solver(sub.graph, s, t);
            tbl.prefix_paths.emplace(cur, translate_path(g, sub, solver.path()));
            for (std::int32_t a = 0; a + 1 < solver.path().h(); ++a) {
                const PathSeq* rp = solver.replacement(a);
                if (!rp) continue;
                std::vector<EdgeId> key = cur;
                key.push_back(sub.old_of[static_cast<std::size_t>(
                    solver.path().edge_ids[static_cast<std::size_t>(a)])]);
                tbl.prefix_paths.emplace(std::move(key), translate_path(g, sub, *rp));
            }
            const TwoFaultTable two = solver.table();
            for (const auto& en : two.entries) {
                std::vector<EdgeId> key = cur;
                key.push_back(sub.old_of[static_cast<std::size_t>(en.e1)]);
                key.push_back(sub.old_of[static_cast<std::size_t>(en.e2)]);
                if (tbl.index.count(key)) continue;
                tbl.index.emplace(key, tbl.entries.size());
                tbl.entries.push_back({std::move(key), en.d});
            }
            return;
        }

        const PathSeq p = shortest_path(sub.graph, s, t);
        tbl.prefix_paths.emplace(cur, translate_path(g, sub, p));
        for (EdgeId esub : p.edge_ids) {
            cur.push_back(sub.old_of[static_cast<std::size_t>(esub)]);
            self(self);
            cur.pop_back();
        }
    };
    descend(descend);
    return tbl;
}

}  // namespace frp
