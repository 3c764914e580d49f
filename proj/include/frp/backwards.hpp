#pragma once

#include <cstdint>
#include <vector>

#include "frp/graph.hpp"
#include "frp/tables.hpp"

namespace frp {

using DistMatrix = std::vector<std::vector<Dist>>;

// One single-source run per vertex; rows indexed by source.
DistMatrix apsp(const GraphView& v);

// All-pairs distances of the graph with the designated path's edges removed.
// Every backwards-distance algorithm consumes this matrix.
DistMatrix apsp_off_path(const Graph& g, const PathSeq& pi);

// f(p_j, p_i) for j > i: the cheapest way from p_j back to p_i when the path
// prefix up to p_i and the path suffix from p_j are deleted. Computed by the
// backward-jump recurrence
//   f(j, i) = min{ d_off(p_j, p_i),
//                  min over i < a < b < j of f(j, a) + d(p_a, p_b) + d_off(p_b, p_i) }
// with the inner minimum maintained incrementally, O(h^3) overall. The result
// carries (a, b) witnesses; (-1, -1) marks a direct off-path detour.
FTable compute_f_dp(const Graph& g, const PathSeq& pi, const DistMatrix& apsp_off);

// How a produced table entry decomposes, for replaying values into walks.
enum class FProv : std::uint8_t {
    None,       // INF or unused cell
    OnPath,     // j <= i cell of a diamond product: forward along the path
    Direct,     // single off-path edge, id in `x`
    OffDirect,  // shortest off-path connection p_j to p_i
    FromA,      // copied from operand A / the round input
    FromB,      // copied from operand B
    Mid,        // A(b, i) + run a->b + B(j, a), positions in (a, b)
    LongOn,     // round input (j, a) + run a->b + round input (b, i)
    LongOff,    // through sample vertex x: legs (a, b) and (a2, b2), -1 = direct
};

struct ProvCell {
    FProv kind = FProv::None;
    std::int32_t x = -1, a = -1, b = -1, a2 = -1, b2 = -1;
};

// A table of upper bounds on f that are exact whenever some optimal witness
// path has at most `ell` vertices. Values outside [-ell*M, ell*M] are clamped
// to INF, which keeps the semantics (any value >= f remains valid).
struct HopBoundedF {
    std::int32_t ell = 0;
    FTable table;
    std::vector<ProvCell> prov;        // filled when built against a trace
    std::int32_t trace_id = -1;        // slot in the trace, -1 when untraced
    std::int32_t srcA = -1, srcB = -1; // trace ids the provenance refers to
};

// Every table produced during a scaled computation, in creation order, for
// entry-by-entry replay. Rounds append their operands and outputs.
struct FScaledTrace {
    std::vector<HopBoundedF> tables;
};

// Diamond product: for j > i the best of A(j,i), B(j,i), and the composites
// A(k', i) + d(p_k, p_k') + B(j, k) over i < k < k' < j with k' - k < ell;
// for j <= i the forward path distance. B acts near p_j, A near p_i.
FTable diamond(const FTable& a, const FTable& b, std::int32_t ell, const PathSeq& pi);

// Off-path jump table d_off(p_j, p_i) with entries of magnitude > bound
// dropped to INF; j <= i cells stay INF markers.
FTable truncate_off_table(const DistMatrix& apsp_off, const PathSeq& pi, Dist bound);

// The ell = 2 base: direct off-path edges p_j -> p_i.
HopBoundedF base_hop_table(const Graph& g, const PathSeq& pi, Weight M, FScaledTrace* trace = nullptr);

// One short round: (f <= ell diamond trunc) diamond f <= ell, both products at
// ceil(3 ell / 2), clamped. `d_off_trunc` must be truncated at the new bound
// times M. Exact for every pair with a witness of at most ceil(3 ell / 2)
// vertices; never below f.
HopBoundedF hop_short_round(const HopBoundedF& fl, const FTable& d_off_trunc, const PathSeq& pi,
                            Weight M, FScaledTrace* trace = nullptr);

// One sampled round: candidates that cross a sampled vertex either on a
// path run or on an off-path detour, combined with the carried-over input.
// Exact (with high probability over the sample) for every pair with a witness
// of at most ceil(3 ell / 2) vertices; never below f in any case.
HopBoundedF hop_long_round(const Graph& g, const PathSeq& pi, const HopBoundedF& fl,
                           const DistMatrix& d_off, Weight M, std::uint64_t sample_seed,
                           double c = 3.0, FScaledTrace* trace = nullptr);

struct ScaledOptions {
    double c = 3.0;            // sampling density constant
    std::int32_t retries = 1;  // redraws allowed after a verification miss
    bool verify = true;        // cross-check the final table against the recurrence
    FScaledTrace* trace = nullptr;
};

// Crossover between the two round kinds: max(1, floor((n / M)^(1/3))).
std::int32_t default_crossover(std::int32_t n, Weight M);

// Scaled computation of f: from the direct-edge base, grow the hop bound by
// factor 3/2 per round (short rounds while ell <= L, sampled rounds after)
// until it reaches n. Verifies against compute_f_dp and redraws the samples
// once on a miss; a second miss raises VerifyMismatch. WeightOutOfRange when
// some |weight| exceeds M. L <= 0 selects the default crossover.
FTable compute_f_scaled(const Graph& g, const PathSeq& pi, Weight M, std::int32_t L,
                        std::uint64_t seed, const ScaledOptions& opts = {});

// Expands a finite traced cell into an edge walk of exactly the stored
// weight, recursing through operand tables; VerifyMismatch when any level
// disagrees, NoFiniteEntry for an INF cell.
std::vector<EdgeId> replay_trace_entry(const Graph& g, const PathSeq& pi,
                                       const FScaledTrace& trace, std::int32_t tid,
                                       std::int32_t j, std::int32_t i);

// An optimal masked path for (j, i) rewritten so that maximal on-path runs
// and off-path segments alternate with the backward interleaving; the bounds
// list the positions b_0, a_1, b_1, ..., a_{r+1} in traversal order.
struct DecompositionWitness {
    std::int32_t j = 0, i = 0;
    Dist length = kInf;
    std::vector<EdgeId> walk;          // p_j to p_i, edge ids in the base graph
    std::vector<std::int32_t> bounds;  // even length 2r + 2
};

// NoFiniteEntry when f(p_j, p_i) is infinite.
DecompositionWitness decompose_f_witness(const Graph& g, const PathSeq& pi, std::int32_t j,
                                         std::int32_t i);

}  // namespace frp
