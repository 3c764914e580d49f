#pragma once

#include "frp/graph.hpp"
#include "frp/tables.hpp"

namespace frp {

// Reference implementations used as ground truth by the test suites. They
// deliberately avoid the production machinery: distances come from a
// label-correcting search that handles negative weights directly, with no
// potentials, no reweighting, and no shared cache.

// Label-correcting single-source distances on a masked view.
std::vector<Dist> brute_sssp(const GraphView& g, VertexId s);

// d(s, t) after removing `removed` on top of whatever the view masks.
Dist brute_dist(const GraphView& g, VertexId s, VertexId t,
                const std::vector<EdgeId>& removed = {});
Dist brute_dist(const Graph& g, VertexId s, VertexId t, const std::vector<EdgeId>& removed = {});

// The full two-fault table: pairs (e1 on the s-t path, e2 on the replacement
// path after e1 fails), each valued by a fresh brute_dist; pairs with both
// edges on the original path are mirrored. Enumeration follows the same
// designated-path tie-break as the production solver so both tables cover
// the same keys; only the values are independent.
TwoFaultTable brute_two_fault_table(const Graph& g, VertexId s, VertexId t);

// Backwards distances f(p_j, p_i): one masked label-correcting run per pair.
FTable brute_f_table(const Graph& g, const PathSeq& pi);

// Hop-limited variant: minimum over walks with at most `ell` vertices on the
// per-pair masked view. Cycles in the masked views are nonnegative, so the
// walk minimum equals the path minimum at the same hop budget.
FTable brute_hop_bounded_f(const Graph& g, const PathSeq& pi, std::int32_t ell);

}  // namespace frp
