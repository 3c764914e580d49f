#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "frp/backwards.hpp"
#include "frp/dso.hpp"
#include "frp/graph.hpp"
#include "frp/rmq.hpp"
#include "frp/tables.hpp"

namespace frp {

// All (e1, e2) with e1 on the canonical s-t path and e2 on the canonical
// replacement path for e1 (replacement ties break toward the original path).
// An e1 whose removal disconnects t pairs with nothing. Throws Unreachable.
std::vector<std::pair<EdgeId, EdgeId>> enumerate_query_pairs(const Graph& g, VertexId s,
                                                             VertexId t);

// Through-costs T(x, y) = d(s, p_x) + d_off(p_x, p_y) + d(p_y, t) over path
// positions; only finite detours become points, everything else defaults INF.
struct AvoidMiddleTables {
    GridMin2D grid;
};

AvoidMiddleTables build_avoid_middle(const PathSeq& pi, const DistMatrix& apsp_off);

// Faults at path-edge indices a < b: best T over x <= a and y > b, i.e. the
// cheapest replacement that skips every vertex strictly inside the window.
GridHit avoid_middle_hit(const AvoidMiddleTables& tabs, const PathSeq& pi, std::int32_t a,
                         std::int32_t b);

// The same minimum for every fault pair a < b; rows are the e1 index,
// columns the e2 index, unused cells INF.
DistMatrix solve_avoid_middle(const PathSeq& pi, const DistMatrix& apsp_off);

// Shifted through-costs T'(x, y) = T(x, y) - d(s, t) plus the backward-jump
// table; answers the approach legs g_s and g_t of the between-faults case.
struct MiddleCaseTables {
    GridMin2D shifted;
    FTable f;
};

MiddleCaseTables build_middle_case(const PathSeq& pi, const DistMatrix& apsp_off, FTable f);

// g_s(a, k): cheapest s -> p_k route avoiding edge a that stays on the path
// up to some p_x (x <= a), detours off-path to some p_y (a < y <= k), and
// follows the path on to p_k. g_t(b, kp) is the mirrored p_kp -> t leg.
// The optional hit receives the (x, y) witness.
Dist g_s_value(const MiddleCaseTables& tabs, const PathSeq& pi, std::int32_t a, std::int32_t k,
               GridHit* hit = nullptr);
Dist g_t_value(const MiddleCaseTables& tabs, const PathSeq& pi, std::int32_t b, std::int32_t kp,
               GridHit* hit = nullptr);

// Best g_s(a, k) + f(p_k, p_kp) + g_t(b, kp) over a < kp <= k <= b for every
// fault pair: the cheapest replacement that visits a window vertex.
DistMatrix solve_uses_middle(const PathSeq& pi, const FTable& f, const DistMatrix& apsp_off);

// Edge-subset copy: same vertex set, edges renumbered densely. Potentials
// carry over, so construction never re-runs the negative-cycle check.
struct Subgraph {
    Graph graph;
    std::vector<EdgeId> old_of;  // new id -> base id
    std::vector<EdgeId> new_of;  // base id -> new id, -1 when removed
};

Subgraph make_subgraph(const Graph& g, const std::vector<EdgeId>& removed);

// Two-fault replacement distances for a fixed pair (s, t): the designated
// path, per-edge single-fault answers, and exact d(s, t) under any fault pair
// with the first fault on the path. Precomputation is immutable after
// construction; queries are safe to run concurrently.
class TwoFrpSolver {
  public:
    TwoFrpSolver(const Graph& g, VertexId s, VertexId t);

    const PathSeq& path() const { return pi_; }
    // d(s, t) with path edge `a` removed; INF for a bridge.
    Dist single_fault(std::int32_t a) const { return sfd_[static_cast<std::size_t>(a)]; }
    // Canonical replacement path for path edge `a`; nullptr for a bridge.
    const PathSeq* replacement(std::int32_t a) const {
        return rok_[static_cast<std::size_t>(a)] ? &rpaths_[static_cast<std::size_t>(a)] : nullptr;
    }

    // Exact d(s, t) with {e1, e2} removed, plus which solver answered. At
    // least one fault must lie on the designated path (after swapping).
    std::pair<Dist, SolveCase> query(EdgeId e1, EdgeId e2) const;

    // Entries for every enumerated pair, plus the swapped twin when both
    // faults lie on the designated path.
    TwoFaultTable table() const;

    // A concrete s-t path of exactly query(e1, e2).first edges that avoids
    // both faults, rebuilt from the solver's witnesses. NoFiniteEntry when
    // the answer is INF.
    PathSeq report(EdgeId e1, EdgeId e2) const;

  private:
    struct Resolved {
        Dist d = kInf;
        SolveCase c = SolveCase::Trivial;
        std::int32_t a = -1, b = -1;  // normalized path-edge indices
        EdgeId off = -1;              // the off-path fault in the one-off case
    };
    Resolved resolve(EdgeId e1, EdgeId e2) const;
    Dist uses_middle_value(std::int32_t a, std::int32_t b, std::int32_t* arg_k,
                           std::int32_t* arg_kp) const;
    // Lazy per-b arrays A_{k,b}(kp) = f(p_k, p_kp) + g_t(b, p_kp).
    const std::vector<Rmq1D>& arrays_for(std::int32_t b) const;

    const Graph* g_;
    VertexId s_, t_;
    PathSeq pi_;
    std::map<EdgeId, std::int32_t> eidx_;  // path edge id -> index
    std::vector<Dist> sfd_;                // single-fault distances per path edge
    std::vector<PathSeq> rpaths_;
    std::vector<std::uint8_t> rok_;
    DistMatrix off_;
    AvoidMiddleTables avoid_;
    MiddleCaseTables mid_;
    AuxOneOff aux_;
    std::unique_ptr<Dso> dso_;  // over aux_.graph

    mutable std::mutex mu_;
    mutable std::map<std::int32_t, std::vector<Rmq1D>> acache_;
};

// The full two-fault table; equivalent to TwoFrpSolver(g, s, t).table().
TwoFaultTable two_frp(const Graph& g, VertexId s, VertexId t);

// Convenience wrapper building a solver for the single report.
PathSeq report_path(const Graph& g, VertexId s, VertexId t, EdgeId e1, EdgeId e2);

// Replacement distances under up to k faults chosen along successive
// replacement paths: entry (e_1..e_k) holds d(s, t) with all of them removed,
// where e_1 lies on the designated path and each e_{j+1} on the canonical
// replacement path for the prefix. prefix_paths keeps those paths for every
// discovered proper prefix that leaves t reachable.
struct FaultTupleTable {
    std::int32_t k = 0;
    VertexId s = 0, t = 0;

    struct Entry {
        std::vector<EdgeId> faults;
        Dist d;
    };
    std::vector<Entry> entries;  // discovery order
    std::map<std::vector<EdgeId>, std::size_t> index;
    std::map<std::vector<EdgeId>, PathSeq> prefix_paths;

    // d(s, t) with an arbitrary fault set of at most k edges removed, by
    // walking the stored paths: follow the current prefix's path, branch on
    // the first fault edge it uses, stop when none is hit.
    Dist query(const std::vector<EdgeId>& faults) const;
};

FaultTupleTable f_frp(const Graph& g, VertexId s, VertexId t, std::int32_t k);

}  // namespace frp
