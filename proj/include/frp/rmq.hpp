#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frp/dist.hpp"
#include "frp/errors.hpp"

namespace frp {

// Static range-minimum structure over a Dist array. O(n log n) build, O(1)
// query. Ties resolve to the smallest index, so witnesses are deterministic.
class Rmq1D {
public:
    Rmq1D() = default;
    explicit Rmq1D(std::vector<Dist> values);

    // Minimum of values[l..r] (inclusive) and its smallest argmin.
    std::pair<Dist, std::int32_t> query(std::int32_t l, std::int32_t r) const;

    std::int32_t size() const { return static_cast<std::int32_t>(values_.size()); }
    Dist value_at(std::int32_t i) const { return values_[static_cast<std::size_t>(i)]; }

private:
    std::vector<Dist> values_;
    // table_[k][i] = smallest argmin of values[i .. i+2^k-1].
    std::vector<std::vector<std::int32_t>> table_;
};

inline Rmq1D rmq_build(std::vector<Dist> values) { return Rmq1D(std::move(values)); }
inline std::pair<Dist, std::int32_t> rmq_query(const Rmq1D& r, std::int32_t l, std::int32_t r2) {
    return r.query(l, r2);
}

struct GridPoint {
    std::int64_t x, y;
    Dist value;
};

struct GridHit {
    Dist value = kInf;
    std::int64_t x = 0, y = 0;  // meaningful only when value < INF
};

// Static orthogonal range-minimum structure over weighted points: a
// merge-sort tree over x with y-sorted node lists, each carrying its own
// Rmq1D. O(n log^2 n) space, O(log^2 n) query. The witness is the
// lexicographically smallest (x, y) point attaining the minimum.
class GridMin2D {
public:
    GridMin2D() = default;
    explicit GridMin2D(std::vector<GridPoint> pts);

    // Minimum over points with x in [x1,x2] and y in [y1,y2]; INF when the
    // rectangle is empty (an inverted range counts as empty).
    GridHit query(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2) const;

    std::int32_t size() const { return static_cast<std::int32_t>(xs_.size()); }

private:
    struct Node {
        std::vector<std::int64_t> ys;
        std::vector<std::int64_t> xs;
        Rmq1D rmq;
    };

    // Min (and whether any point qualifies) of node `idx` restricted to the
    // y-range; writes the in-node argmin position.
    bool node_min(std::int32_t idx, std::int64_t y1, std::int64_t y2, Dist& val,
                  std::int32_t& at) const;
    void descend_witness(std::int32_t idx, std::int64_t y1, std::int64_t y2, Dist target,
                         GridHit& out) const;

    std::vector<std::int64_t> xs_;  // x of each point, in (x, y) sorted order
    std::int32_t base_ = 0;
    std::vector<Node> nodes_;
};

inline GridMin2D grid_build(std::vector<GridPoint> pts) { return GridMin2D(std::move(pts)); }
inline GridHit grid_query(const GridMin2D& g, std::int64_t x1, std::int64_t x2, std::int64_t y1,
                          std::int64_t y2) {
    return g.query(x1, x2, y1, y2);
}

}  // namespace frp
