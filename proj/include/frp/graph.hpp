#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frp/dist.hpp"
#include "frp/errors.hpp"

namespace frp {

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;
    Weight w = 0;
};

// Directed multigraph with dense edge ids (the index into `edges`) and Johnson
// potentials certified at construction. No negative cycles exist in any Graph
// instance; every view of it inherits that guarantee.
class Graph {
  public:
    std::int32_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> out;  // per-vertex out edge ids, in id order
    std::vector<std::vector<EdgeId>> in;   // per-vertex in edge ids, in id order
    // w + phi[tail] - phi[head] >= 0 for every edge.
    std::vector<Weight> phi;

    std::int32_t m() const { return static_cast<std::int32_t>(edges.size()); }
};

// Builds adjacency and potentials (Bellman-Ford from a virtual source).
// Throws NegativeCycleError with a witness cycle.
Graph make_graph(std::int32_t n, std::vector<Edge> edges);

// Same, with caller-supplied valid potentials (checked; avoids the Bellman-Ford pass).
Graph make_graph(std::int32_t n, std::vector<Edge> edges, std::vector<Weight> phi);

// Fresh potentials for g (any valid array is acceptable; this one is the
// Bellman-Ford distances from a virtual zero-weight source, negated shift-free).
std::vector<Weight> johnson_potentials(const Graph& g);

// "n m" header, then m lines "tail head weight", 0-indexed.
Graph load_edge_list(std::istream& text);
Graph load_edge_list(const std::string& text);
std::string dump_edge_list(const Graph& g);

// Edge-subset view. Cheap to copy; shares the base graph.
class GraphView {
  public:
    explicit GraphView(const Graph& g) : g_(&g), off_(g.edges.size(), 0) {}
    GraphView(const Graph& g, const std::vector<EdgeId>& removed);

    const Graph& base() const { return *g_; }
    std::int32_t n() const { return g_->n; }
    bool removed(EdgeId e) const { return off_[static_cast<std::size_t>(e)] != 0; }

    // Copy of this view with more edges masked.
    GraphView without(const std::vector<EdgeId>& more) const;
    GraphView without(EdgeId e) const { return without(std::vector<EdgeId>{e}); }

  private:
    const Graph* g_;
    std::vector<std::uint8_t> off_;
};

// Validates ids (UnknownEdgeId) and returns the masked view.
GraphView mask_edges(const Graph& g, const std::vector<EdgeId>& removed);

// Edge ids and weights preserved, tail/head swapped, potentials negated.
Graph reverse(const Graph& g);

struct SplitResult {
    Graph graph;                     // 2n vertices: v_in = 2v, v_out = 2v+1
    std::vector<VertexId> vin;       // v -> v_in
    std::vector<VertexId> vout;      // v -> v_out
    std::vector<EdgeId> splitter;    // v -> id of the zero-weight edge v_in -> v_out
};

// Each vertex v becomes v_in -> v_out (weight 0); edge (u,v,w) becomes (u_out, v_in, w).
SplitResult split_vertices(const Graph& g);

struct SsspResult {
    std::vector<Dist> dist;
    std::vector<EdgeId> parent;  // parent edge id on the tree, -1 at source/unreached
};

// The designated shortest path s-t algorithms tie-break toward. `pos` maps a
// vertex to its path position or -1 (see PathSeq::pos).
struct TieBreak {
    const std::vector<std::int32_t>* pos = nullptr;
};

// Dijkstra on Johnson-reweighted edges; exact for the negative weights the
// potentials certify. Tie-break on equal distance: prefer a parent vertex on
// the designated path, then the smaller (parent, edge id) pair. Deterministic.
SsspResult sssp(const GraphView& v, VertexId source, const TieBreak* tb = nullptr);

inline SsspResult sssp(const Graph& g, VertexId source, const TieBreak* tb = nullptr) {
    return sssp(GraphView(g), source, tb);
}

struct PathSeq {
    std::vector<VertexId> verts;       // p_1..p_h
    std::vector<EdgeId> edge_ids;      // the h-1 path edges
    std::vector<Dist> prefix;          // prefix[i] = d(s, p_i); prefix[0] = 0
    std::vector<std::int32_t> pos;     // per base vertex: path position or -1
    std::vector<std::uint8_t> on_edge; // per base edge id: 1 if on the path

    std::int32_t h() const { return static_cast<std::int32_t>(verts.size()); }
    VertexId s() const { return verts.front(); }
    VertexId t() const { return verts.back(); }
    Dist length() const { return prefix.back(); }
    bool has_vertex(VertexId v) const { return pos[static_cast<std::size_t>(v)] >= 0; }
    // d(p_a, p_b) along the path for positions a <= b.
    Dist along(std::int32_t a, std::int32_t b) const { return prefix[b] - prefix[a]; }
};

// Canonical s-t shortest path (deterministic across runs). Throws Unreachable.
PathSeq shortest_path(const GraphView& v, VertexId s, VertexId t, const TieBreak* tb = nullptr);

inline PathSeq shortest_path(const Graph& g, VertexId s, VertexId t, const TieBreak* tb = nullptr) {
    return shortest_path(GraphView(g), s, t, tb);
}

// Path extraction from a tree; requires dist[t] finite.
PathSeq extract_path(const GraphView& v, const SsspResult& r, VertexId s, VertexId t);

}  // namespace frp
