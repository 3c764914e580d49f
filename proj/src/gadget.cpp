#include "frp/gadget.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "frp/frp2.hpp"
#include "frp/ssrp.hpp"

namespace frp {

namespace {

std::int64_t ipow(std::int64_t b, std::int32_t e) {
    std::int64_t r = 1;
    for (std::int32_t i = 0; i < e; ++i) r *= b;
    return r;
}

// Cache key for memoized engines. Graph addresses recur across instances
// built in a loop, so identity must come from the content itself.
std::uint64_t instance_fingerprint(const Graph& g, VertexId s, VertexId t) {
    std::uint64_t h = 14695981039346656037ull;
    const auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(g.n));
    mix(static_cast<std::uint64_t>(g.edges.size()));
    for (const Edge& e : g.edges) {
        mix(static_cast<std::uint64_t>(e.tail));
        mix(static_cast<std::uint64_t>(e.head));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(e.w)));
    }
    mix(static_cast<std::uint64_t>(s));
    mix(static_cast<std::uint64_t>(t));
    return h;
}

std::vector<std::vector<std::uint8_t>> undirected_adjacency(const Graph& tri) {
    std::vector<std::vector<std::uint8_t>> adj(
        static_cast<std::size_t>(tri.n),
        std::vector<std::uint8_t>(static_cast<std::size_t>(tri.n), 0));
    for (const Edge& e : tri.edges) {
        if (e.tail == e.head) continue;
        adj[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] = 1;
        adj[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)] = 1;
    }
    return adj;
}

}  // namespace

std::int32_t gadget_base(std::int32_t L, std::int32_t k) {
    if (L < 1 || k < 1) fail(Err::BadParams, "bucket size and fault budget must be positive");
    std::int32_t b = 1;
    while (ipow(b, k) < L) ++b;
    return b;
}

std::vector<std::int32_t> phi(std::int64_t u, std::int32_t base, std::int32_t k) {
    if (base < 1 || k < 1 || u < 0 || u >= ipow(base, k))
        fail(Err::RangeOutOfBounds, "index has no k-digit representation");
    std::vector<std::int32_t> digits(static_cast<std::size_t>(k), 0);
    for (std::int32_t j = k - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(u % base);
        u /= base;
    }
    return digits;
}

std::pair<Graph, GadgetLayout> build_gadget(const Graph& tri, std::int32_t b, std::int32_t L,
                                            std::int32_t k) {
    if (k < 1 || L < 1) fail(Err::BadParams, "bucket size and fault budget must be positive");
    const std::int32_t n = tri.n;
    const std::int32_t buckets = (n + L - 1) / L;
    if (b < 0 || b >= buckets) fail(Err::BadParams, "bucket index out of range");
    const std::int32_t B = gadget_base(L, k);

    GadgetLayout lay;
    lay.params = {k, L, B, b, n};

    std::int32_t nv = 0;
    auto fresh = [&nv]() { return nv++; };
    std::vector<Edge> edges;
    auto add_edge = [&edges](VertexId u, VertexId v) {
        edges.push_back({u, v, 1});
        return static_cast<EdgeId>(edges.size() - 1);
    };
    // A "path of length X" becomes X unit edges through X-1 fresh vertices.
    auto add_path = [&](VertexId from, VertexId to, Dist length) {
        VertexId cur = from;
        for (Dist step = 1; step < length; ++step) {
            const VertexId next = fresh();
            add_edge(cur, next);
            cur = next;
            ++lay.n_internal;
        }
        add_edge(cur, to);
        lay.connections.push_back({from, to, length});
    };

    lay.p.resize(static_cast<std::size_t>(k));
    lay.chunk_edge.resize(static_cast<std::size_t>(k));
    for (std::int32_t i = 0; i < k; ++i) {
        const std::int64_t chunks = ipow(B, i);
        lay.p[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(chunks));
        lay.chunk_edge[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(chunks));
        for (std::int64_t j = 0; j < chunks; ++j) {
            auto& slots = lay.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            slots.resize(static_cast<std::size_t>(B) + 1);
            for (auto& v : slots) v = fresh();
            auto& ce = lay.chunk_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            ce.resize(static_cast<std::size_t>(B));
            for (std::int32_t s = 0; s < B; ++s)
                ce[static_cast<std::size_t>(s)] =
                    add_edge(slots[static_cast<std::size_t>(s)], slots[static_cast<std::size_t>(s) + 1]);
        }
    }
    lay.q.resize(static_cast<std::size_t>(L));
    for (auto& v : lay.q) v = fresh();
    lay.a.resize(static_cast<std::size_t>(n));
    for (auto& v : lay.a) v = fresh();
    lay.b.resize(static_cast<std::size_t>(n));
    for (auto& v : lay.b) v = fresh();
    lay.c.resize(static_cast<std::size_t>(L));
    for (auto& v : lay.c) v = fresh();

    auto pv = [&lay](std::int32_t i, std::int64_t j, std::int32_t s) {
        return lay.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(s)];
    };
    for (std::int32_t i = 0; i + 1 < k; ++i) {
        for (std::int64_t j = 0; j < ipow(B, i); ++j) {
            for (std::int32_t s = 0; s < B; ++s)
                add_path(pv(i, j, s), pv(i + 1, j * B + s, 0),
                         2 * (ipow(B, k - i) - s * ipow(B, k - i - 1)));
            for (std::int32_t s = 1; s <= B; ++s)
                add_path(pv(i + 1, j * B + s - 1, B), pv(i, j, s), 2 * s * ipow(B, k - i - 1));
        }
    }
    for (std::int64_t j = 0; j < ipow(B, k - 1); ++j) {
        for (std::int32_t s = 0; s < B; ++s) {
            const std::int64_t idx = j * B + s;
            if (idx < L) add_path(pv(k - 1, j, s), lay.q[static_cast<std::size_t>(idx)], 2 * (B - s));
        }
        for (std::int32_t s = 1; s <= B; ++s) {
            const std::int64_t idx = j * B + s - 1;
            if (idx < L) add_path(lay.c[static_cast<std::size_t>(idx)], pv(k - 1, j, s), 2 * s);
        }
    }

    const auto adj = undirected_adjacency(tri);
    const std::int32_t pop = std::min(n, (b + 1) * L) - b * L;
    for (std::int32_t i = 0; i < pop; ++i)
        for (std::int32_t j = 0; j < n; ++j)
            if (adj[static_cast<std::size_t>(b * L + i)][static_cast<std::size_t>(j)])
                lay.adjacency.push_back(
                    add_edge(lay.q[static_cast<std::size_t>(i)], lay.a[static_cast<std::size_t>(j)]));
    for (std::int32_t i = 0; i < n; ++i)
        for (std::int32_t j = 0; j < n; ++j)
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                lay.adjacency.push_back(
                    add_edge(lay.a[static_cast<std::size_t>(i)], lay.b[static_cast<std::size_t>(j)]));
    for (std::int32_t i = 0; i < n; ++i)
        for (std::int32_t j = 0; j < pop; ++j)
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(b * L + j)])
                lay.adjacency.push_back(
                    add_edge(lay.b[static_cast<std::size_t>(i)], lay.c[static_cast<std::size_t>(j)]));

    lay.s = pv(0, 0, 0);
    lay.t = pv(0, 0, B);
    // Unit weights carry an all-zero potential, so skip the construction scan.
    Graph g = make_graph(nv, edges, std::vector<Dist>(static_cast<std::size_t>(nv), 0));
    return {std::move(g), std::move(lay)};
}

Dist q_dist_formula(std::int64_t w, std::int32_t k, std::int32_t base) {
    const auto digits = phi(w, base, k);
    Dist total = 0;
    for (std::int32_t i = 0; i < k; ++i) {
        const Dist d = digits[static_cast<std::size_t>(i)];
        total += d + 2 * (ipow(base, k - i) - d * ipow(base, k - i - 1));
    }
    return total;
}

Dist c_dist_formula(std::int64_t w, std::int32_t k, std::int32_t base) {
    const auto digits = phi(w, base, k);
    Dist total = 0;
    for (std::int32_t i = 0; i < k; ++i) {
        const Dist d = digits[static_cast<std::size_t>(i)];
        total += base - 1 - d + 2 * ipow(base, k - i - 1) * (d + 1);
    }
    return total;
}

Dist expected_hit_length(std::int32_t k, std::int32_t base) {
    Dist total = 3;
    for (std::int32_t i = 0; i < k; ++i)
        total += 2 * ipow(base, k - i) + 2 * ipow(base, k - i - 1) + base - 1;
    return total;
}

FaultSet fault_set(const GadgetLayout& lay, std::int64_t u) {
    if (u < 0 || u >= lay.params.L) fail(Err::RangeOutOfBounds, "query index outside the bucket");
    const std::int32_t B = lay.params.base;
    const auto digits = phi(u, B, lay.params.k);
    FaultSet fs;
    fs.u = u;
    // The cut follows the digit path: chunk j in layer i is where the
    // backbone walk to q_u runs, and the digit names the slot to sever.
    std::int64_t j = 0;
    for (std::int32_t i = 0; i < lay.params.k; ++i) {
        const std::int32_t d = digits[static_cast<std::size_t>(i)];
        fs.edges.push_back(lay.chunk_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                         [static_cast<std::size_t>(d)]);
        j = j * B + d;
    }
    return fs;
}

GadgetEngine gadget_engine_brute() {
    return [](const Graph& g, VertexId s, VertexId t, const FaultSet& fs) {
        return sssp(GraphView(g, fs.edges), s).dist[static_cast<std::size_t>(t)];
    };
}

GadgetEngine gadget_engine_toolkit(std::int32_t k) {
    if (k < 1) fail(Err::BadParams, "fault budget must be positive");
    if (k == 1) {
        struct State {
            std::mutex mu;
            std::map<std::uint64_t, PairReplacement> cache;
        };
        auto st = std::make_shared<State>();
        return [st](const Graph& g, VertexId s, VertexId t, const FaultSet& fs) -> Dist {
            if (fs.edges.size() != 1) fail(Err::BadParams, "engine answers single-fault queries");
            const std::uint64_t key = instance_fingerprint(g, s, t);
            const PairReplacement* pr = nullptr;
            {
                const std::lock_guard<std::mutex> lock(st->mu);
                auto it = st->cache.find(key);
                if (it == st->cache.end())
                    it = st->cache.emplace(key, replacement_paths_pair(g, s, t)).first;
                pr = &it->second;
            }
            for (std::size_t i = 0; i < pr->path.edge_ids.size(); ++i)
                if (pr->path.edge_ids[i] == fs.edges[0]) return pr->d[i];
            return pr->path.length();
        };
    }
    struct State {
        std::mutex mu;
        std::map<std::uint64_t, FaultTupleTable> cache;
    };
    auto st = std::make_shared<State>();
    return [st, k](const Graph& g, VertexId s, VertexId t, const FaultSet& fs) -> Dist {
        if (static_cast<std::int32_t>(fs.edges.size()) != k)
            fail(Err::BadParams, "fault count does not match the engine");
        const std::uint64_t key = instance_fingerprint(g, s, t);
        const FaultTupleTable* tbl = nullptr;
        {
            const std::lock_guard<std::mutex> lock(st->mu);
            auto it = st->cache.find(key);
            if (it == st->cache.end()) it = st->cache.emplace(key, f_frp(g, s, t, k)).first;
            tbl = &it->second;
        }
        return tbl->query(fs.edges);
    };
}

bool triangle_detect_via_queries(const Graph& tri, std::int32_t k, std::int32_t L,
                                 const GadgetEngine& engine, TriangleWitness* wit) {
    if (k < 1 || L < 1) fail(Err::BadParams, "bucket size and fault budget must be positive");
    const std::int32_t buckets = (tri.n + L - 1) / L;
    for (std::int32_t b = 0; b < buckets; ++b) {
        auto [g, lay] = build_gadget(tri, b, L, k);
        const Dist hit = expected_hit_length(k, lay.params.base);
        const std::int32_t pop = std::min(tri.n, (b + 1) * L) - b * L;
        for (std::int64_t u = 0; u < pop; ++u) {
            const FaultSet fs = fault_set(lay, u);
            if (engine(g, lay.s, lay.t, fs) == hit) {
                if (wit != nullptr) *wit = {b, u};
                return true;
            }
        }
    }
    return false;
}

bool has_triangle_brute(const Graph& tri) {
    const auto adj = undirected_adjacency(tri);
    for (std::int32_t i = 0; i < tri.n; ++i)
        for (std::int32_t j = i + 1; j < tri.n; ++j) {
            if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            for (std::int32_t l = j + 1; l < tri.n; ++l)
                if (adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] &&
                    adj[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)])
                    return true;
        }
    return false;
}

}  // namespace frp
