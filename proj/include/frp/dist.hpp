#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>

namespace frp {

using Weight = std::int64_t;
using Dist = std::int64_t;
using EdgeId = std::int32_t;
using VertexId = std::int32_t;

// Unreachable marker. Strictly greater than any finite distance; addition saturates.
inline constexpr Dist kInf = std::numeric_limits<std::int64_t>::max() / 2;

// Largest accepted |edge weight|. Keeps any n-hop sum far below kInf.
inline constexpr Weight kMaxAbsWeight = std::int64_t(1) << 40;

inline bool is_inf(Dist d) { return d >= kInf; }

inline Dist dadd(Dist a, Dist b) {
    if (a >= kInf || b >= kInf) return kInf;
    Dist s = a + b;
    return s >= kInf ? kInf : s;
}

inline Dist dadd(Dist a, Dist b, Dist c) { return dadd(dadd(a, b), c); }

inline Dist dmin(Dist a, Dist b) { return std::min(a, b); }

}  // namespace frp
