#pragma once

#include <cstdint>

#include "frp/graph.hpp"

namespace frp {

// Deterministic splitmix64 stream; the same seed yields the same graph on
// every platform, which the regression suites rely on.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    // Uniform double in [0, 1).
    double real();
};

// Random digraph: each ordered pair (u, v), u != v, becomes an edge with
// probability p, weight uniform in [wmin, wmax]. When the draw contains a
// negative cycle the seed is perturbed and the graph redrawn, so the result
// is always a valid instance.
Graph gen_digraph(std::int32_t n, double p, Weight wmin, Weight wmax, std::uint64_t seed);

// Random undirected graph as a symmetric digraph with unit weights; used for
// the triangle-detection instances.
Graph gen_undirected(std::int32_t n, double p, std::uint64_t seed);

// Unit-weight path 0 -> 1 -> ... -> n-1 plus `extra` random heavy edges
// (weight >= n, so the path stays the unique shortest route and every prefix
// of it stays shortest too). Detour-rich instances with a long hop count.
Graph gen_path_plus(std::int32_t n, std::int32_t extra, std::uint64_t seed);

}  // namespace frp
