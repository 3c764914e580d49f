#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "frp/backwards.hpp"
#include "frp/dso.hpp"
#include "frp/graph.hpp"
#include "frp/ssrp.hpp"
#include "frp/tables.hpp"

namespace frp {

// Consecutive runs of path edges. Interval q owns edges [q*g, min((q+1)*g, h-1))
// and the vertices they touch, so neighbouring intervals share one boundary
// vertex.
struct IntervalPartition {
    std::int32_t g = 1;

    struct Interval {
        std::int32_t lo = 0, hi = 0;  // vertex positions [lo, hi]; edges [lo, hi)
    };
    std::vector<Interval> intervals;
    std::vector<std::int32_t> of_edge;  // path-edge index -> interval index

    std::int32_t count() const { return static_cast<std::int32_t>(intervals.size()); }
};

IntervalPartition make_intervals(const PathSeq& pi, std::int32_t g);

// Fixed-pair two-fault distance structure: heavy precomputation once, then
// each query assembles a small auxiliary graph over the fault intervals and
// runs one Dijkstra on it. Immutable after construction; queries are pure and
// may run concurrently.
class BoundedDso {
  public:
    // 1 <= g_param; BadParams otherwise. Throws Unreachable when t is not
    // reachable from s.
    BoundedDso(const Graph& g, VertexId s, VertexId t, std::int32_t g_param);

    const PathSeq& path() const { return pi_; }
    const IntervalPartition& partition() const { return part_; }

    // Exact d(s, t) with {e1, e2} removed, for any two distinct edges.
    Dist query(EdgeId e1, EdgeId e2) const;
    std::pair<Dist, SolveCase> query_case(EdgeId e1, EdgeId e2) const;

    // The typed entry points insist on their own precondition (WrongCase):
    // one fault on the path and one off it / both inside one interval / both
    // on the path in two different intervals (either order).
    Dist query_one_off(EdgeId e1, EdgeId e2) const;
    Dist query_same_interval(EdgeId e1, EdgeId e2) const;
    Dist query_diff_intervals(EdgeId e1, EdgeId e2) const;

    // Per-query auxiliary-graph size, for the O(g^2) cost assertion.
    struct Stats {
        std::uint64_t queries = 0;
        std::uint64_t aux_edges_last = 0;  // edges added by the latest aux build
        std::uint64_t aux_edges_max = 0;
        std::uint64_t lookups_last = 0;  // precomputed-table reads, latest build
        std::uint64_t lookups_max = 0;
    };
    Stats stats() const;

  private:
    struct PerInterval {
        std::vector<EdgeId> edge_ids;  // path edges inside the interval
        SsrpResult from_s;             // in G minus E(I), targets V(I)+{t}
        SsrpResult from_t;             // in rev(G minus E(I)) from t, targets V(I)+{s}
        SsrpResult from_r;             // in G minus E(I) from r_I, targets V(I)+{s,t}
        SsrpResult from_l;             // in rev(G minus E(I)) from l_I, targets V(I)+{s,t}
    };

    struct AuxBuild;  // accumulating vertex map + edge list + counters

    std::int32_t edge_pos(EdgeId e) const;  // position on the path, -1 off it
    // The nine-step different-interval construction, oriented: forward solves
    // the instance as given, reversed solves it on the reversed graph with the
    // endpoints swapped (same intervals, mirrored roles).
    Dist diff_one_orientation(std::int32_t a, std::int32_t b, bool rev) const;

    const Graph* g_;
    VertexId s_, t_;
    PathSeq pi_;
    Graph grev_;
    IntervalPartition part_;
    std::map<EdgeId, std::int32_t> eidx_;

    SsspResult sssp_s_;  // from s in G
    SsrpResult ssrp_s_;
    SsspResult sssp_t_;  // from t in the reversed graph
    SsrpResult ssrp_t_;
    DistMatrix off_;  // all pairs, path edges removed
    std::unique_ptr<Dso> dso_off_;
    FTable f_;
    std::vector<PerInterval> per_;

    struct Counters {
        std::atomic<std::uint64_t> queries{0};
        std::atomic<std::uint64_t> aux_edges_last{0};
        std::atomic<std::uint64_t> aux_edges_max{0};
        std::atomic<std::uint64_t> lookups_last{0};
        std::atomic<std::uint64_t> lookups_max{0};
    };
    std::shared_ptr<Counters> counters_ = std::make_shared<Counters>();
};

BoundedDso precompute(const Graph& g, VertexId s, VertexId t, std::int32_t g_param);

inline Dist query_one_off(const BoundedDso& d, EdgeId e1, EdgeId e2) {
    return d.query_one_off(e1, e2);
}
inline Dist query_same_interval(const BoundedDso& d, EdgeId e1, EdgeId e2) {
    return d.query_same_interval(e1, e2);
}
inline Dist query_diff_intervals(const BoundedDso& d, EdgeId e1, EdgeId e2) {
    return d.query_diff_intervals(e1, e2);
}
inline Dist query(const BoundedDso& d, EdgeId e1, EdgeId e2) { return d.query(e1, e2); }

// Full table through the bounded structure: every enumerated pair answered by
// the dispatcher. WeightOutOfRange when some |weight| exceeds M; g_param <= 0
// selects max(1, round(n^(2/3))).
TwoFaultTable two_frp_bounded(const Graph& g, VertexId s, VertexId t, Weight M,
                              std::int32_t g_param = 0);

}  // namespace frp
