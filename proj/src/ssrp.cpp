#include "frp/ssrp.hpp"

#include <string>

namespace frp {

Dist SsrpResult::query_dist(VertexId t, EdgeId e) const {
    if (t < 0 || t >= static_cast<VertexId>(is_target.size()) || !is_target[t]) {
        fail(Err::BadParams, "vertex " + std::to_string(t) + " is not in the target set");
    }
    auto it = table.find({t, e});
    if (it != table.end()) return it->second;
    return tree.dist[static_cast<std::size_t>(t)];
}

SsrpResult ssrp_targets(const GraphView& v, VertexId s, const std::vector<VertexId>& targets) {
    SsrpResult r;
    r.s = s;
    r.tree = sssp(v, s);
    r.is_target.assign(static_cast<std::size_t>(v.n()), 0);
    for (VertexId t : targets) {
        if (t < 0 || t >= v.n()) fail(Err::BadParams, "target " + std::to_string(t) + " out of range");
        r.is_target[static_cast<std::size_t>(t)] = 1;
    }

    const Graph& g = v.base();
    // Group reachable targets by the tree edges on their paths, so each
    // distinct failed edge costs one SSSP no matter how many targets share it.
    std::map<EdgeId, std::vector<VertexId>> hit_by;
    for (VertexId t = 0; t < v.n(); ++t) {
        if (!r.is_target[static_cast<std::size_t>(t)]) continue;
        if (is_inf(r.tree.dist[static_cast<std::size_t>(t)])) continue;
        for (VertexId x = t; x != s;) {
            EdgeId pe = r.tree.parent[static_cast<std::size_t>(x)];
            hit_by[pe].push_back(t);
            x = g.edges[static_cast<std::size_t>(pe)].tail;
        }
    }

    for (const auto& [e, ts] : hit_by) {
        SsspResult rem = sssp(v.without(e), s);
        for (VertexId t : ts) r.table[{t, e}] = rem.dist[static_cast<std::size_t>(t)];
    }
    return r;
}

PairReplacement replacement_paths_pair(const Graph& g, VertexId s, VertexId t) {
    PairReplacement out;
    out.path = shortest_path(g, s, t);
    out.d.reserve(out.path.edge_ids.size());
    GraphView v(g);
    for (EdgeId e : out.path.edge_ids) {
        out.d.push_back(sssp(v.without(e), s).dist[static_cast<std::size_t>(t)]);
    }
    return out;
}

}  // namespace frp
