#include "frp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <tuple>

namespace frp {

const char* err_name(Err e) {
    switch (e) {
        case Err::Parse: return "parse error";
        case Err::NegativeCycle: return "negative cycle";
        case Err::Unreachable: return "unreachable";
        case Err::RangeOutOfBounds: return "range out of bounds";
        case Err::DimensionMismatch: return "dimension mismatch";
        case Err::UnknownEdgeId: return "unknown edge id";
        case Err::E2OnPath: return "second failure lies on the path";
        case Err::WrongCase: return "wrong query case";
        case Err::BadParams: return "bad parameters";
        case Err::WeightOutOfRange: return "weight out of range";
        case Err::NoFiniteEntry: return "no finite entry";
        case Err::Io: return "io error";
        case Err::VerifyMismatch: return "verification mismatch";
    }
    return "error";
}

namespace {

// The weight cap protects summation headroom for untrusted input; internal
// constructions with certified potentials may carry distance-sized weights.
void check_edges(std::int32_t n, const std::vector<Edge>& edges, bool cap_weights) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            fail(Err::BadParams, "edge " + std::to_string(i) + " endpoint out of range");
        if (cap_weights && (e.w > kMaxAbsWeight || e.w < -kMaxAbsWeight))
            fail(Err::WeightOutOfRange, "edge " + std::to_string(i) + " weight " + std::to_string(e.w));
    }
}

// Bellman-Ford from a virtual source connected to every vertex with weight 0.
// The converged labels are valid Johnson potentials; a relaxable edge after
// n rounds yields a negative-cycle witness.
std::vector<Weight> bellman_ford_potentials(std::int32_t n, const std::vector<Edge>& edges) {
    std::vector<Weight> dist(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> parent(static_cast<std::size_t>(n), -1);
    bool changed = true;
    for (std::int32_t round = 0; round < n && changed; ++round) {
        changed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            if (dist[e.tail] + e.w < dist[e.head]) {
                dist[e.head] = dist[e.tail] + e.w;
                parent[e.head] = static_cast<EdgeId>(i);
                changed = true;
            }
        }
    }
    if (changed) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            if (dist[e.tail] + e.w < dist[e.head]) {
                // Walk n parent steps to land inside a cycle, then collect it.
                VertexId v = e.head;
                dist[e.head] = dist[e.tail] + e.w;
                parent[e.head] = static_cast<EdgeId>(i);
                for (std::int32_t k = 0; k < n; ++k) v = edges[parent[v]].tail;
                std::vector<VertexId> cycle;
                std::int64_t weight = 0;
                VertexId cur = v;
                do {
                    cycle.push_back(cur);
                    weight += edges[parent[cur]].w;
                    cur = edges[parent[cur]].tail;
                } while (cur != v);
                std::reverse(cycle.begin(), cycle.end());
                throw NegativeCycleError(std::move(cycle), weight);
            }
        }
    }
    return dist;
}

void build_adjacency(Graph& g) {
    g.out.assign(static_cast<std::size_t>(g.n), {});
    g.in.assign(static_cast<std::size_t>(g.n), {});
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        g.out[g.edges[i].tail].push_back(static_cast<EdgeId>(i));
        g.in[g.edges[i].head].push_back(static_cast<EdgeId>(i));
    }
}

}  // namespace

Graph make_graph(std::int32_t n, std::vector<Edge> edges) {
    if (n < 0) fail(Err::BadParams, "negative vertex count");
    check_edges(n, edges, true);
    Graph g;
    g.n = n;
    g.phi = bellman_ford_potentials(n, edges);
    g.edges = std::move(edges);
    build_adjacency(g);
    return g;
}

Graph make_graph(std::int32_t n, std::vector<Edge> edges, std::vector<Weight> phi) {
    if (n < 0) fail(Err::BadParams, "negative vertex count");
    check_edges(n, edges, false);
    if (phi.size() != static_cast<std::size_t>(n)) fail(Err::BadParams, "potential array size");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.w + phi[e.tail] - phi[e.head] < 0)
            fail(Err::BadParams, "supplied potentials do not cover edge " + std::to_string(i));
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.phi = std::move(phi);
    build_adjacency(g);
    return g;
}

std::vector<Weight> johnson_potentials(const Graph& g) {
    return bellman_ford_potentials(g.n, g.edges);
}

namespace {

bool parse_i64(const char*& p, const char* end, std::int64_t& out) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) return false;
    bool neg = false;
    if (*p == '-') { neg = true; ++p; }
    if (p == end || !std::isdigit(static_cast<unsigned char>(*p))) return false;
    std::int64_t v = 0;
    while (p != end && std::isdigit(static_cast<unsigned char>(*p))) {
        v = v * 10 + (*p - '0');
        if (v < 0) return false;
        ++p;
    }
    out = neg ? -v : v;
    return true;
}

bool line_rest_blank(const char* p, const char* end) {
    while (p != end) {
        if (*p != ' ' && *p != '\t' && *p != '\r') return false;
        ++p;
    }
    return true;
}

}  // namespace

Graph load_edge_list(std::istream& text) {
    std::string line;
    std::size_t lineno = 0;
    std::int64_t n = -1, m = -1;
    std::vector<Edge> edges;
    std::int64_t seen = 0;
    while (std::getline(text, line)) {
        ++lineno;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
        if (p == end || *p == '#' || *p == '\r') continue;
        if (n < 0) {
            if (!parse_i64(p, end, n) || !parse_i64(p, end, m) || !line_rest_blank(p, end) ||
                n < 0 || m < 0)
                fail(Err::Parse, "line " + std::to_string(lineno) + ": expected \"n m\" header");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (seen >= m)
            fail(Err::Parse, "line " + std::to_string(lineno) + ": more than " +
                                 std::to_string(m) + " edge lines");
        std::int64_t a, b, w;
        if (!parse_i64(p, end, a) || !parse_i64(p, end, b) || !parse_i64(p, end, w) ||
            !line_rest_blank(p, end))
            fail(Err::Parse, "line " + std::to_string(lineno) + ": expected \"tail head weight\"");
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(Err::Parse, "line " + std::to_string(lineno) + ": vertex out of range");
        if (w > kMaxAbsWeight || w < -kMaxAbsWeight)
            fail(Err::WeightOutOfRange, "line " + std::to_string(lineno));
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), w});
        ++seen;
    }
    if (n < 0) fail(Err::Parse, "empty input");
    if (seen != m)
        fail(Err::Parse, "expected " + std::to_string(m) + " edges, got " + std::to_string(seen));
    return make_graph(static_cast<std::int32_t>(n), std::move(edges));
}

Graph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

std::string dump_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges) out << e.tail << ' ' << e.head << ' ' << e.w << '\n';
    return out.str();
}

GraphView::GraphView(const Graph& g, const std::vector<EdgeId>& removed)
    : g_(&g), off_(g.edges.size(), 0) {
    for (EdgeId e : removed) off_[static_cast<std::size_t>(e)] = 1;
}

GraphView GraphView::without(const std::vector<EdgeId>& more) const {
    GraphView v = *this;
    for (EdgeId e : more) v.off_[static_cast<std::size_t>(e)] = 1;
    return v;
}

GraphView mask_edges(const Graph& g, const std::vector<EdgeId>& removed) {
    for (EdgeId e : removed)
        if (e < 0 || e >= g.m()) fail(Err::UnknownEdgeId, std::to_string(e));
    return GraphView(g, removed);
}

Graph reverse(const Graph& g) {
    std::vector<Edge> edges(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        edges[i] = {g.edges[i].head, g.edges[i].tail, g.edges[i].w};
    std::vector<Weight> phi(g.phi.size());
    for (std::size_t v = 0; v < g.phi.size(); ++v) phi[v] = -g.phi[v];
    return make_graph(g.n, std::move(edges), std::move(phi));
}

SplitResult split_vertices(const Graph& g) {
    SplitResult r;
    r.vin.resize(static_cast<std::size_t>(g.n));
    r.vout.resize(static_cast<std::size_t>(g.n));
    r.splitter.resize(static_cast<std::size_t>(g.n));
    std::vector<Edge> edges;
    edges.reserve(g.edges.size() + static_cast<std::size_t>(g.n));
    for (std::int32_t v = 0; v < g.n; ++v) {
        r.vin[v] = 2 * v;
        r.vout[v] = 2 * v + 1;
    }
    for (const Edge& e : g.edges) edges.push_back({r.vout[e.tail], r.vin[e.head], e.w});
    for (std::int32_t v = 0; v < g.n; ++v) {
        r.splitter[v] = static_cast<EdgeId>(edges.size());
        edges.push_back({r.vin[v], r.vout[v], 0});
    }
    std::vector<Weight> phi(static_cast<std::size_t>(2 * g.n));
    for (std::int32_t v = 0; v < g.n; ++v) phi[2 * v] = phi[2 * v + 1] = g.phi[v];
    r.graph = make_graph(2 * g.n, std::move(edges), std::move(phi));
    return r;
}

SsspResult sssp(const GraphView& view, VertexId source, const TieBreak* tb) {
    const Graph& g = view.base();
    const std::int32_t n = g.n;
    if (source < 0 || source >= n) fail(Err::BadParams, "sssp source out of range");
    std::vector<Dist> rdist(static_cast<std::size_t>(n), kInf);
    std::vector<EdgeId> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::uint8_t> done(static_cast<std::size_t>(n), 0);
    using Item = std::pair<Dist, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    rdist[source] = 0;
    pq.push({0, source});
    auto rank = [&](VertexId u, EdgeId e) {
        int pref = tb && tb->pos && (*tb->pos)[static_cast<std::size_t>(u)] >= 0 ? 0 : 1;
        return std::tuple<int, VertexId, EdgeId>(pref, u, e);
    };
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u] || d != rdist[u]) continue;
        done[u] = 1;
        for (EdgeId eid : g.out[u]) {
            if (view.removed(eid)) continue;
            const Edge& e = g.edges[eid];
            if (e.head == e.tail) continue;
            Dist nd = d + (e.w + g.phi[e.tail] - g.phi[e.head]);
            VertexId v = e.head;
            if (nd < rdist[v]) {
                rdist[v] = nd;
                parent[v] = eid;
                pq.push({nd, v});
            } else if (nd == rdist[v] && !done[v] && parent[v] >= 0 &&
                       rank(u, eid) < rank(g.edges[parent[v]].tail, parent[v])) {
                parent[v] = eid;
            }
        }
    }
    std::vector<Dist> dist(static_cast<std::size_t>(n), kInf);
    for (std::int32_t v = 0; v < n; ++v)
        if (rdist[v] < kInf) dist[v] = rdist[v] - g.phi[source] + g.phi[v];
    return SsspResult{std::move(dist), std::move(parent)};
}

PathSeq extract_path(const GraphView& view, const SsspResult& r, VertexId s, VertexId t) {
    const Graph& g = view.base();
    if (is_inf(r.dist[static_cast<std::size_t>(t)]))
        fail(Err::Unreachable, std::to_string(t) + " from " + std::to_string(s));
    PathSeq p;
    VertexId v = t;
    while (v != s) {
        EdgeId e = r.parent[static_cast<std::size_t>(v)];
        if (e < 0) fail(Err::Unreachable, "broken tree at " + std::to_string(v));
        p.edge_ids.push_back(e);
        p.verts.push_back(v);
        v = g.edges[e].tail;
    }
    p.verts.push_back(s);
    std::reverse(p.verts.begin(), p.verts.end());
    std::reverse(p.edge_ids.begin(), p.edge_ids.end());
    p.prefix.resize(p.verts.size());
    const Dist base = r.dist[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < p.verts.size(); ++i)
        p.prefix[i] = r.dist[static_cast<std::size_t>(p.verts[i])] - base;
    p.pos.assign(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < p.verts.size(); ++i)
        p.pos[static_cast<std::size_t>(p.verts[i])] = static_cast<std::int32_t>(i);
    p.on_edge.assign(g.edges.size(), 0);
    for (EdgeId e : p.edge_ids) p.on_edge[static_cast<std::size_t>(e)] = 1;
    return p;
}

PathSeq shortest_path(const GraphView& v, VertexId s, VertexId t, const TieBreak* tb) {
    SsspResult r = sssp(v, s, tb);
    return extract_path(v, r, s, t);
}

}  // namespace frp
