#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "frp/graph.hpp"
#include "frp/ssrp.hpp"

namespace frp {

// Single-fault distance sensitivity oracle over a fixed view H:
// query(u, v, e) = d_{H minus e}(u, v), exact for every u, v, e.
//
// Lazy mode memoizes one Dijkstra per distinct (source, failed edge) pair and
// short-circuits queries whose failed edge is off the source tree path (the
// distance is then unchanged). Precomputed mode builds a full replacement
// table per source on first use. Both modes give identical answers in any
// query order; a coarse lock makes concurrent queries safe.
class Dso {
  public:
    enum class Mode { Lazy, Precomputed };

    explicit Dso(GraphView base, Mode mode = Mode::Lazy)
        : base_(std::move(base)), mode_(mode) {}

    Dist query(VertexId u, VertexId v, EdgeId e) const;

    Mode mode() const { return mode_; }
    const GraphView& base() const { return base_; }

  private:
    const SsspResult& tree_for(VertexId u) const;  // callers hold mu_
    bool on_tree_path(const SsspResult& tr, VertexId u, VertexId v, EdgeId e) const;

    GraphView base_;
    Mode mode_;

    mutable std::mutex mu_;
    mutable std::map<VertexId, SsspResult> trees_;
    mutable std::map<std::pair<VertexId, EdgeId>, std::vector<Dist>> rows_;
    mutable std::map<VertexId, SsrpResult> pre_;
};

inline Dso dso_build(const GraphView& h, Dso::Mode mode = Dso::Mode::Lazy) {
    return Dso(h, mode);
}

// The reduction graph for "one failed edge on the designated path": the base
// graph minus the path edges, plus entry vertices a_1..a_h and exit vertices
// b_1..b_h. Edge a_j -> p_i (weight d(s, p_i)) exists for i <= j, and
// p_j -> b_i (weight d(p_j, t)) for j >= i, indices 1-based along the path.
// With e1 = (p_i, p_{i+1}) failed, d_{G minus {e1, e2}}(s, t) equals
// d_{aux minus e2}(a_i, b_{i+1}) for every e2 off the path.
struct AuxOneOff {
    Graph graph;
    PathSeq pi;
    std::int32_t n0 = 0;  // base vertex count
    std::int32_t h = 0;

    std::vector<EdgeId> to_aux;   // base edge id -> aux edge id (-1 for path edges)
    std::vector<EdgeId> to_base;  // aux edge id -> base edge id (-1 for a/b edges)

    VertexId a(std::int32_t i) const { return n0 + (i - 1); }      // 1-based
    VertexId b(std::int32_t i) const { return n0 + h + (i - 1); }  // 1-based
};

AuxOneOff build_one_off_aux(const Graph& g, const PathSeq& pi);

// d_{G minus {(p_i, p_{i+1}), e2}}(s, t) via the reduction; `dso` must be an
// oracle over aux.graph. E2OnPath when e2 lies on the designated path.
Dist one_off_query(const AuxOneOff& aux, const Dso& dso, std::int32_t i, EdgeId e2);

}  // namespace frp
