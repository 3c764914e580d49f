#include "frp/rmq.hpp"

#include <algorithm>
#include <bit>

namespace frp {

Rmq1D::Rmq1D(std::vector<Dist> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0) return;
    const int levels = std::bit_width(n);
    table_.resize(static_cast<std::size_t>(levels));
    table_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::int32_t>(i);
    for (int k = 1; k < levels; ++k) {
        const std::size_t half = std::size_t(1) << (k - 1);
        const std::size_t count = n - (std::size_t(1) << k) + 1;
        table_[k].resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::int32_t a = table_[k - 1][i];
            std::int32_t b = table_[k - 1][i + half];
            table_[k][i] = values_[b] < values_[a] ? b : a;
        }
    }
}

std::pair<Dist, std::int32_t> Rmq1D::query(std::int32_t l, std::int32_t r) const {
    if (l < 0 || r < l || r >= size()) fail(Err::RangeOutOfBounds, "rmq");
    const std::uint32_t len = static_cast<std::uint32_t>(r - l + 1);
    const int k = std::bit_width(len) - 1;
    std::int32_t a = table_[k][static_cast<std::size_t>(l)];
    std::int32_t b = table_[k][static_cast<std::size_t>(r) - (std::size_t(1) << k) + 1];
    std::int32_t best;
    if (values_[a] < values_[b])
        best = a;
    else if (values_[b] < values_[a])
        best = b;
    else
        best = std::min(a, b);
    return {values_[best], best};
}

GridMin2D::GridMin2D(std::vector<GridPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const GridPoint& a, const GridPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.value < b.value;
    });
    const std::size_t n = pts.size();
    xs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) xs_[i] = pts[i].x;
    if (n == 0) return;
    base_ = static_cast<std::int32_t>(std::bit_ceil(n));
    nodes_.resize(static_cast<std::size_t>(2 * base_));
    for (std::size_t i = 0; i < n; ++i) {
        Node& leaf = nodes_[static_cast<std::size_t>(base_) + i];
        leaf.ys = {pts[i].y};
        leaf.xs = {pts[i].x};
        leaf.rmq = Rmq1D({pts[i].value});
    }
    for (std::int32_t idx = base_ - 1; idx >= 1; --idx) {
        const Node& a = nodes_[static_cast<std::size_t>(2 * idx)];
        const Node& b = nodes_[static_cast<std::size_t>(2 * idx + 1)];
        Node& node = nodes_[static_cast<std::size_t>(idx)];
        const std::size_t total = a.ys.size() + b.ys.size();
        if (total == 0) continue;
        node.ys.reserve(total);
        node.xs.reserve(total);
        std::vector<Dist> vals;
        vals.reserve(total);
        std::size_t i = 0, j = 0;
        auto take = [&](const Node& src, std::size_t k) {
            node.ys.push_back(src.ys[k]);
            node.xs.push_back(src.xs[k]);
            vals.push_back(src.rmq.value_at(static_cast<std::int32_t>(k)));
        };
        while (i < a.ys.size() || j < b.ys.size()) {
            bool from_a;
            if (i == a.ys.size())
                from_a = false;
            else if (j == b.ys.size())
                from_a = true;
            else
                from_a = a.ys[i] < b.ys[j] || (a.ys[i] == b.ys[j] && a.xs[i] <= b.xs[j]);
            if (from_a)
                take(a, i++);
            else
                take(b, j++);
        }
        node.rmq = Rmq1D(std::move(vals));
    }
}

bool GridMin2D::node_min(std::int32_t idx, std::int64_t y1, std::int64_t y2, Dist& val,
                         std::int32_t& at) const {
    const Node& node = nodes_[static_cast<std::size_t>(idx)];
    auto lo = std::lower_bound(node.ys.begin(), node.ys.end(), y1) - node.ys.begin();
    auto hi = std::upper_bound(node.ys.begin(), node.ys.end(), y2) - node.ys.begin();
    if (lo >= hi) return false;
    auto [v, a] = node.rmq.query(static_cast<std::int32_t>(lo), static_cast<std::int32_t>(hi - 1));
    val = v;
    at = a;
    return true;
}

void GridMin2D::descend_witness(std::int32_t idx, std::int64_t y1, std::int64_t y2, Dist target,
                                GridHit& out) const {
    // Walk toward the leftmost leaf (smallest (x, y)) still attaining target.
    while (idx < base_) {
        Dist v;
        std::int32_t at;
        if (node_min(2 * idx, y1, y2, v, at) && v == target)
            idx = 2 * idx;
        else
            idx = 2 * idx + 1;
    }
    const Node& leaf = nodes_[static_cast<std::size_t>(idx)];
    out.value = target;
    out.x = leaf.xs[0];
    out.y = leaf.ys[0];
}

GridHit GridMin2D::query(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2) const {
    GridHit out;
    if (xs_.empty() || x1 > x2 || y1 > y2) return out;
    std::size_t lo = static_cast<std::size_t>(
        std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin());
    std::size_t hi = static_cast<std::size_t>(
        std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin());
    if (lo >= hi) return out;

    // Canonical segment-tree cover of [lo, hi), left to right.
    std::vector<std::int32_t> cover;
    {
        std::vector<std::int32_t> right;
        std::int64_t l = static_cast<std::int64_t>(lo) + base_;
        std::int64_t r = static_cast<std::int64_t>(hi) + base_;
        while (l < r) {
            if (l & 1) cover.push_back(static_cast<std::int32_t>(l++));
            if (r & 1) right.push_back(static_cast<std::int32_t>(--r));
            l >>= 1;
            r >>= 1;
        }
        cover.insert(cover.end(), right.rbegin(), right.rend());
    }

    Dist best = kInf;
    for (std::int32_t idx : cover) {
        Dist v;
        std::int32_t at;
        if (node_min(idx, y1, y2, v, at)) best = dmin(best, v);
    }
    if (is_inf(best)) return out;
    for (std::int32_t idx : cover) {
        Dist v;
        std::int32_t at;
        if (node_min(idx, y1, y2, v, at) && v == best) {
            descend_witness(idx, y1, y2, best, out);
            return out;
        }
    }
    return out;  // unreachable
}

}  // namespace frp
