#pragma once

#include <map>
#include <utility>
#include <vector>

#include "frp/graph.hpp"

namespace frp {

// Single-source replacement distances restricted to a target set. The tree is
// the canonical one for the build-time view; the table covers exactly the
// pairs (t, e) with t a target and e on the tree path to t.
struct SsrpResult {
    VertexId s = 0;
    SsspResult tree;
    std::vector<std::uint8_t> is_target;
    std::map<std::pair<VertexId, EdgeId>, Dist> table;  // (t, e) -> d(s, t, e)

    // Table value when present, tree distance otherwise. An edge off the tree
    // path to t cannot change d(s, t), so the fallback is exact. BadParams for
    // a vertex outside the build-time target set.
    Dist query_dist(VertexId t, EdgeId e) const;
};

struct PairReplacement {
    PathSeq path;         // canonical s-t path
    std::vector<Dist> d;  // d[k] = d(s, t, path.edge_ids[k]); INF for bridges
};

// d(s, t, e) for every edge on the canonical s-t path. Throws Unreachable.
PairReplacement replacement_paths_pair(const Graph& g, VertexId s, VertexId t);

// One SSSP on v minus e per distinct tree edge that lies on a path to a
// target; unreachable targets contribute no entries.
SsrpResult ssrp_targets(const GraphView& v, VertexId s, const std::vector<VertexId>& targets);

}  // namespace frp
