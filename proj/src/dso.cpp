#include "frp/dso.hpp"

#include <numeric>
#include <string>

namespace frp {

const SsspResult& Dso::tree_for(VertexId u) const {
    auto it = trees_.find(u);
    if (it == trees_.end()) it = trees_.emplace(u, sssp(base_, u)).first;
    return it->second;
}

bool Dso::on_tree_path(const SsspResult& tr, VertexId u, VertexId v, EdgeId e) const {
    const Graph& g = base_.base();
    for (VertexId x = v; x != u;) {
        EdgeId pe = tr.parent[static_cast<std::size_t>(x)];
        if (pe == e) return true;
        x = g.edges[static_cast<std::size_t>(pe)].tail;
    }
    return false;
}

Dist Dso::query(VertexId u, VertexId v, EdgeId e) const {
    const Graph& g = base_.base();
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) fail(Err::BadParams, "query vertex out of range");
    if (e < 0 || e >= g.m()) fail(Err::UnknownEdgeId, std::to_string(e));

    std::lock_guard<std::mutex> lock(mu_);

    if (mode_ == Mode::Precomputed) {
        auto it = pre_.find(u);
        if (it == pre_.end()) {
            std::vector<VertexId> all(static_cast<std::size_t>(g.n));
            std::iota(all.begin(), all.end(), 0);
            it = pre_.emplace(u, ssrp_targets(base_, u, all)).first;
        }
        return it->second.query_dist(v, e);
    }

    const SsspResult& tr = tree_for(u);
    if (is_inf(tr.dist[static_cast<std::size_t>(v)])) return kInf;
    if (!on_tree_path(tr, u, v, e)) return tr.dist[static_cast<std::size_t>(v)];

    auto key = std::make_pair(u, e);
    auto it = rows_.find(key);
    if (it == rows_.end()) it = rows_.emplace(key, sssp(base_.without(e), u).dist).first;
    return it->second[static_cast<std::size_t>(v)];
}

AuxOneOff build_one_off_aux(const Graph& g, const PathSeq& pi) {
    AuxOneOff aux;
    aux.pi = pi;
    aux.n0 = g.n;
    aux.h = pi.h();
    const std::int32_t h = aux.h;

    std::vector<Edge> edges;
    edges.reserve(g.edges.size() + static_cast<std::size_t>(h) * (h + 1));
    aux.to_aux.assign(g.edges.size(), -1);
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (pi.on_edge[static_cast<std::size_t>(e)]) continue;
        aux.to_aux[static_cast<std::size_t>(e)] = static_cast<EdgeId>(edges.size());
        edges.push_back(g.edges[static_cast<std::size_t>(e)]);
    }

    for (std::int32_t j = 1; j <= h; ++j) {
        for (std::int32_t i = 1; i <= j; ++i) {
            edges.push_back({aux.a(j), pi.verts[static_cast<std::size_t>(i - 1)],
                             pi.prefix[static_cast<std::size_t>(i - 1)]});
        }
    }
    for (std::int32_t i = 1; i <= h; ++i) {
        for (std::int32_t j = i; j <= h; ++j) {
            edges.push_back({pi.verts[static_cast<std::size_t>(j - 1)], aux.b(i),
                             pi.length() - pi.prefix[static_cast<std::size_t>(j - 1)]});
        }
    }

    aux.to_base.assign(edges.size(), -1);
    for (EdgeId e = 0; e < g.m(); ++e) {
        EdgeId t = aux.to_aux[static_cast<std::size_t>(e)];
        if (t >= 0) aux.to_base[static_cast<std::size_t>(t)] = e;
    }

    // The entry/exit weights are shortest distances in g, so phi(s) and
    // phi(t) cover them: d(s, p_i) + phi(s) - phi(p_i) >= 0 holds for any
    // valid potential array, and symmetrically for the exits.
    std::vector<Weight> phi = g.phi;
    phi.resize(static_cast<std::size_t>(g.n) + 2 * static_cast<std::size_t>(h));
    for (std::int32_t i = 1; i <= h; ++i) {
        phi[static_cast<std::size_t>(aux.a(i))] = g.phi[static_cast<std::size_t>(pi.s())];
        phi[static_cast<std::size_t>(aux.b(i))] = g.phi[static_cast<std::size_t>(pi.t())];
    }

    aux.graph = make_graph(g.n + 2 * h, std::move(edges), std::move(phi));
    return aux;
}

Dist one_off_query(const AuxOneOff& aux, const Dso& dso, std::int32_t i, EdgeId e2) {
    if (i < 1 || i > aux.h - 1) fail(Err::BadParams, "path index " + std::to_string(i));
    if (e2 < 0 || e2 >= static_cast<EdgeId>(aux.to_aux.size()))
        fail(Err::UnknownEdgeId, std::to_string(e2));
    if (aux.pi.on_edge[static_cast<std::size_t>(e2)])
        fail(Err::E2OnPath, "edge " + std::to_string(e2));
    return dso.query(aux.a(i), aux.b(i + 1), aux.to_aux[static_cast<std::size_t>(e2)]);
}

}  // namespace frp
