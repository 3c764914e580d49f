#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "frp/graph.hpp"

namespace frp {

// One triangle-detection reduction instance: bucket b of an n-vertex graph,
// probed through k-fault fixed-pair distance queries. base is the smallest
// integer whose k-th power reaches L, so every query index has k digits.
struct GadgetParams {
    std::int32_t k = 1;
    std::int32_t L = 1;
    std::int32_t base = 1;
    std::int32_t b = 0;
    std::int32_t n = 0;
};

std::int32_t gadget_base(std::int32_t L, std::int32_t k);

// Registry of the built instance. Layer vertices are addressed p[i][j][s]:
// slot s of chunk j in layer i; each chunk is a directed path of base unit
// edges whose ids sit in chunk_edge[i][j][s]. Long inter-layer connections
// are expanded into fresh unit-edge paths; their interior vertices are
// counted in n_internal and never appear in any fault set.
struct GadgetLayout {
    GadgetParams params;
    VertexId s = 0, t = 0;
    std::vector<std::vector<std::vector<VertexId>>> p;
    std::vector<std::vector<std::vector<EdgeId>>> chunk_edge;
    std::vector<VertexId> q, a, b, c;
    std::vector<EdgeId> adjacency;  // the Q->A, A->B, B->C edges

    struct Connection {
        VertexId from = 0, to = 0;
        Dist length = 0;
    };
    std::vector<Connection> connections;
    std::int32_t n_internal = 0;
};

// Digits of u in the given base, most significant first, exactly k of them.
// RangeOutOfBounds unless 0 <= u < base^k.
std::vector<std::int32_t> phi(std::int64_t u, std::int32_t base, std::int32_t k);

// The instance for bucket b: blocks Q, A, B, C wired by the bucket's
// adjacency (the triangle graph is read undirected), plus k chunk layers
// between the fixed endpoints. BadParams on a bad bucket or parameters.
std::pair<Graph, GadgetLayout> build_gadget(const Graph& tri, std::int32_t b, std::int32_t L,
                                            std::int32_t k);

// Closed-form backbone distances: s -> q_w and c_w -> t with the block
// adjacency removed. RangeOutOfBounds unless 0 <= w < base^k.
Dist q_dist_formula(std::int64_t w, std::int32_t k, std::int32_t base);
Dist c_dist_formula(std::int64_t w, std::int32_t k, std::int32_t base);

// Query distance that certifies a triangle through the probed vertex.
Dist expected_hit_length(std::int32_t k, std::int32_t base);

// The k chunk edges cut by query u: one per layer, following the digit path.
struct FaultSet {
    std::int64_t u = 0;
    std::vector<EdgeId> edges;
};
FaultSet fault_set(const GadgetLayout& lay, std::int64_t u);

// Answers one exact k-fault fixed-pair distance query on a built instance.
using GadgetEngine = std::function<Dist(const Graph&, VertexId, VertexId, const FaultSet&)>;

// One masked-graph shortest path per query.
GadgetEngine gadget_engine_brute();
// Precomputes a fault-tuple table per instance on first use (replacement
// paths for k = 1) and answers from it; instances are keyed by a content
// fingerprint, so rebuilding an equal graph reuses its table.
GadgetEngine gadget_engine_toolkit(std::int32_t k);

struct TriangleWitness {
    std::int32_t b = -1;
    std::int64_t u = -1;
};

// True iff some bucket query returns the certifying length; the witness (when
// asked for) names the probe whose vertex v_{bL+u} closes a triangle. Queries
// whose index exceeds the bucket population are skipped.
bool triangle_detect_via_queries(const Graph& tri, std::int32_t k, std::int32_t L,
                                 const GadgetEngine& engine, TriangleWitness* wit = nullptr);

bool has_triangle_brute(const Graph& tri);

}  // namespace frp
