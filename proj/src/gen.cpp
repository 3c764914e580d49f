#include "frp/gen.hpp"

namespace frp {

std::uint64_t Rng::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

double Rng::real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

// Weights drawn at or above the potential difference of their endpoints sum
// to a nonnegative total around every cycle, so this draw never needs a
// negative-cycle reject.
std::vector<Edge> potential_shifted_draw(std::int32_t n, double p, Weight wmin, Weight wmax,
                                         Rng& rng) {
    const Weight span = std::max<Weight>(0, std::min<Weight>(-wmin, wmax));
    std::vector<Weight> psi(static_cast<std::size_t>(n));
    for (Weight& x : psi) x = rng.uniform(0, span);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.real() < p) {
                const Weight lo = std::max(wmin, psi[static_cast<std::size_t>(v)] -
                                                     psi[static_cast<std::size_t>(u)]);
                edges.push_back({u, v, rng.uniform(lo, wmax)});
            }
        }
    return edges;
}

}  // namespace

Graph gen_digraph(std::int32_t n, double p, Weight wmin, Weight wmax, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0 || wmin > wmax) fail(Err::BadParams, "gen_digraph");
    for (int attempt = 0; attempt < 4; ++attempt) {
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v) {
                if (u == v) continue;
                if (rng.real() < p) edges.push_back({u, v, rng.uniform(wmin, wmax)});
            }
        try {
            return make_graph(n, std::move(edges));
        } catch (const NegativeCycleError&) {
            continue;
        }
    }
    // Dense draws with negative weights almost surely contain a negative
    // cycle; regenerate against a random potential instead of rejecting
    // forever.
    Rng rng(seed ^ 0xa0761d6478bd642fULL);
    return make_graph(n, potential_shifted_draw(n, p, wmin, wmax, rng));
}

Graph gen_undirected(std::int32_t n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) fail(Err::BadParams, "gen_undirected");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.real() < p) {
                edges.push_back({u, v, 1});
                edges.push_back({v, u, 1});
            }
    return make_graph(n, std::move(edges));
}

Graph gen_path_plus(std::int32_t n, std::int32_t extra, std::uint64_t seed) {
    if (n < 2 || extra < 0) fail(Err::BadParams, "gen_path_plus");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    for (std::int32_t k = 0; k < extra; ++k) {
        VertexId u = static_cast<VertexId>(rng.uniform(0, n - 1));
        VertexId v = static_cast<VertexId>(rng.uniform(0, n - 1));
        if (u == v) continue;
        edges.push_back({u, v, static_cast<Weight>(n) + rng.uniform(0, 7)});
    }
    return make_graph(n, std::move(edges));
}

}  // namespace frp
