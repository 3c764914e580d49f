#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frp/graph.hpp"

namespace frp {

// Which solver produced a two-fault table entry. "Brute" marks reference
// values; the rest name the production code paths.
enum class SolveCase : std::uint8_t {
    Brute,
    OneOff,
    AvoidMiddle,
    UsesMiddle,
    SameAsSingleFault,
    Trivial,
    SameInterval,
    DiffGood,
    DiffReverse,
};

const char* to_string(SolveCase c);

struct TwoFaultTable {
    VertexId s = 0, t = 0;
    PathSeq path;  // the designated s-t shortest path

    struct Entry {
        EdgeId e1, e2;
        Dist d;
        SolveCase solved_by;
    };
    std::vector<Entry> entries;
    std::map<std::pair<EdgeId, EdgeId>, std::size_t> index;

    // Inserts once; a duplicate key keeps the first entry.
    void put(EdgeId e1, EdgeId e2, Dist d, SolveCase c);
    const Entry* find(EdgeId e1, EdgeId e2) const;
};

// Backwards distances along a designated path with vertices p_0..p_{h-1}:
// entry (j, i) with j > i holds f(p_j, p_i); everything else is INF filler.
struct FTable {
    std::int32_t h = 0;
    std::vector<Dist> vals;  // row-major h*h

    // Witnesses (present when built by the recurrence, empty otherwise):
    // wa/wb = (-1,-1) marks a direct detour; otherwise the entry decomposes
    // as f(p_j, p_a) + walk along the path a -> b + detour b -> p_i.
    std::vector<std::int32_t> wa, wb;

    FTable() = default;
    explicit FTable(std::int32_t h_, bool with_witness = false)
        : h(h_), vals(static_cast<std::size_t>(h_) * static_cast<std::size_t>(h_), kInf) {
        if (with_witness) {
            wa.assign(vals.size(), -1);
            wb.assign(vals.size(), -1);
        }
    }

    Dist at(std::int32_t j, std::int32_t i) const {
        return vals[static_cast<std::size_t>(j) * h + i];
    }
    Dist& at(std::int32_t j, std::int32_t i) { return vals[static_cast<std::size_t>(j) * h + i]; }
    bool has_witness() const { return !wa.empty(); }
};

}  // namespace frp
