#include "frp/oracle.hpp"

#include <deque>

namespace frp {

const char* to_string(SolveCase c) {
    switch (c) {
        case SolveCase::Brute: return "Brute";
        case SolveCase::OneOff: return "OneOff";
        case SolveCase::AvoidMiddle: return "AvoidMiddle";
        case SolveCase::UsesMiddle: return "UsesMiddle";
        case SolveCase::SameAsSingleFault: return "SameAsSingleFault";
        case SolveCase::Trivial: return "Trivial";
        case SolveCase::SameInterval: return "SameInterval";
        case SolveCase::DiffGood: return "DiffIntervals(Good)";
        case SolveCase::DiffReverse: return "DiffIntervals(Reverse)";
    }
    return "?";
}

void TwoFaultTable::put(EdgeId e1, EdgeId e2, Dist d, SolveCase c) {
    auto key = std::make_pair(e1, e2);
    if (index.count(key)) return;
    index.emplace(key, entries.size());
    entries.push_back({e1, e2, d, c});
}

const TwoFaultTable::Entry* TwoFaultTable::find(EdgeId e1, EdgeId e2) const {
    auto it = index.find(std::make_pair(e1, e2));
    return it == index.end() ? nullptr : &entries[it->second];
}

std::vector<Dist> brute_sssp(const GraphView& view, VertexId s) {
    const Graph& g = view.base();
    std::vector<Dist> dist(static_cast<std::size_t>(g.n), kInf);
    std::vector<std::uint8_t> queued(static_cast<std::size_t>(g.n), 0);
    std::deque<VertexId> q;
    dist[s] = 0;
    q.push_back(s);
    queued[s] = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        queued[u] = 0;
        for (EdgeId eid : g.out[u]) {
            if (view.removed(eid)) continue;
            const Edge& e = g.edges[eid];
            Dist nd = dist[u] + e.w;
            if (nd < dist[e.head]) {
                dist[e.head] = nd;
                if (!queued[e.head]) {
                    queued[e.head] = 1;
                    q.push_back(e.head);
                }
            }
        }
    }
    return dist;
}

Dist brute_dist(const GraphView& g, VertexId s, VertexId t, const std::vector<EdgeId>& removed) {
    return brute_sssp(g.without(removed), s)[static_cast<std::size_t>(t)];
}

Dist brute_dist(const Graph& g, VertexId s, VertexId t, const std::vector<EdgeId>& removed) {
    return brute_dist(GraphView(g), s, t, removed);
}

TwoFaultTable brute_two_fault_table(const Graph& g, VertexId s, VertexId t) {
    TwoFaultTable table;
    table.s = s;
    table.t = t;
    GraphView whole(g);
    table.path = shortest_path(whole, s, t);
    TieBreak prefer_pi{&table.path.pos};
    for (EdgeId e1 : table.path.edge_ids) {
        GraphView v1 = whole.without(e1);
        SsspResult r1 = sssp(v1, s, &prefer_pi);
        if (is_inf(r1.dist[static_cast<std::size_t>(t)])) continue;
        PathSeq pi2 = extract_path(v1, r1, s, t);
        for (EdgeId e2 : pi2.edge_ids) {
            Dist d = brute_dist(whole, s, t, {e1, e2});
            table.put(e1, e2, d, SolveCase::Brute);
            if (table.path.on_edge[static_cast<std::size_t>(e2)])
                table.put(e2, e1, d, SolveCase::Brute);
        }
    }
    return table;
}

FTable brute_f_table(const Graph& g, const PathSeq& pi) {
    const std::int32_t h = pi.h();
    FTable f(h);
    GraphView whole(g);
    for (std::int32_t j = 1; j < h; ++j)
        for (std::int32_t i = 0; i < j; ++i) {
            std::vector<EdgeId> removed;
            for (std::int32_t k = 0; k < i; ++k) removed.push_back(pi.edge_ids[k]);
            for (std::int32_t k = j; k < h - 1; ++k) removed.push_back(pi.edge_ids[k]);
            f.at(j, i) =
                brute_sssp(whole.without(removed), pi.verts[j])[static_cast<std::size_t>(pi.verts[i])];
        }
    return f;
}

FTable brute_hop_bounded_f(const Graph& g, const PathSeq& pi, std::int32_t ell) {
    if (ell < 1) fail(Err::BadParams, "hop bound");
    const std::int32_t h = pi.h();
    FTable f(h);
    GraphView whole(g);
    for (std::int32_t j = 1; j < h; ++j)
        for (std::int32_t i = 0; i < j; ++i) {
            std::vector<EdgeId> removed;
            for (std::int32_t k = 0; k < i; ++k) removed.push_back(pi.edge_ids[k]);
            for (std::int32_t k = j; k < h - 1; ++k) removed.push_back(pi.edge_ids[k]);
            GraphView view = whole.without(removed);
            // Walk DP: cur[v] = min length over walks from p_j with <= r edges.
            std::vector<Dist> cur(static_cast<std::size_t>(g.n), kInf);
            cur[pi.verts[j]] = 0;
            Dist best = ell >= 1 && pi.verts[j] == pi.verts[i] ? 0 : kInf;
            for (std::int32_t r = 1; r < ell; ++r) {
                std::vector<Dist> nxt = cur;
                for (std::size_t eid = 0; eid < g.edges.size(); ++eid) {
                    if (view.removed(static_cast<EdgeId>(eid))) continue;
                    const Edge& e = g.edges[eid];
                    if (is_inf(cur[e.tail])) continue;
                    nxt[e.head] = dmin(nxt[e.head], cur[e.tail] + e.w);
                }
                cur = std::move(nxt);
                best = dmin(best, cur[pi.verts[i]]);
            }
            f.at(j, i) = best;
        }
    return f;
}

}  // namespace frp
