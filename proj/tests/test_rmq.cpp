#include <doctest.h>

#include <vector>

#include "frp/gen.hpp"
#include "frp/rmq.hpp"

using namespace frp;

namespace {

std::vector<Dist> random_values(std::int32_t n, std::uint64_t seed, Dist lo, Dist hi) {
    Rng rng(seed);
    std::vector<Dist> out(static_cast<std::size_t>(n));
    for (auto& v : out) v = rng.uniform(lo, hi);
    return out;
}

}  // namespace

TEST_CASE("range minima match a linear scan, ties to the smallest index") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        // A narrow value range forces plenty of ties.
        const std::vector<Dist> vals = random_values(45, seed, -3, 3);
        const Rmq1D rmq(vals);
        REQUIRE(rmq.size() == 45);
        for (std::int32_t l = 0; l < 45; ++l)
            for (std::int32_t r = l; r < 45; ++r) {
                Dist best = kInf;
                std::int32_t at = -1;
                for (std::int32_t i = l; i <= r; ++i)
                    if (vals[static_cast<std::size_t>(i)] < best) {
                        best = vals[static_cast<std::size_t>(i)];
                        at = i;
                    }
                const auto [v, idx] = rmq.query(l, r);
                CHECK(v == best);
                CHECK(idx == at);
            }
    }
}

TEST_CASE("single-element structure answers itself") {
    const Rmq1D rmq(std::vector<Dist>{7});
    const auto [v, idx] = rmq.query(0, 0);
    CHECK(v == 7);
    CHECK(idx == 0);
    CHECK(rmq.value_at(0) == 7);
}

TEST_CASE("infinite cells participate without overflow") {
    const Rmq1D rmq(std::vector<Dist>{kInf, 3, kInf});
    CHECK(rmq.query(0, 2).first == 3);
    CHECK(rmq.query(0, 0).first == kInf);
    CHECK(rmq.query(2, 2).first == kInf);
}

TEST_CASE("grid minima match a point scan with lexicographic witnesses") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        std::vector<GridPoint> pts;
        for (int i = 0; i < 60; ++i)
            pts.push_back({rng.uniform(0, 9), rng.uniform(0, 9), rng.uniform(-4, 4)});
        const GridMin2D grid(pts);
        REQUIRE(grid.size() == 60);
        for (std::int64_t x1 = 0; x1 <= 9; x1 += 2)
            for (std::int64_t x2 = x1; x2 <= 9; x2 += 2)
                for (std::int64_t y1 = 0; y1 <= 9; y1 += 3)
                    for (std::int64_t y2 = y1; y2 <= 9; y2 += 3) {
                        GridHit want;
                        for (const GridPoint& p : pts) {
                            if (p.x < x1 || p.x > x2 || p.y < y1 || p.y > y2) continue;
                            const bool better =
                                p.value < want.value ||
                                (p.value == want.value &&
                                 (p.x < want.x || (p.x == want.x && p.y < want.y)));
                            if (is_inf(want.value) || better) want = {p.value, p.x, p.y};
                        }
                        const GridHit got = grid.query(x1, x2, y1, y2);
                        CHECK(got.value == want.value);
                        if (!is_inf(want.value)) {
                            CHECK(got.x == want.x);
                            CHECK(got.y == want.y);
                        }
                    }
    }
}

TEST_CASE("empty and inverted rectangles are infinite") {
    const GridMin2D grid(std::vector<GridPoint>{{1, 1, 5}});
    CHECK(is_inf(grid.query(2, 9, 0, 9).value));
    CHECK(is_inf(grid.query(5, 2, 0, 9).value));
    CHECK(is_inf(grid.query(0, 9, 5, 2).value));
    CHECK(grid.query(1, 1, 1, 1).value == 5);
    const GridMin2D empty{std::vector<GridPoint>{}};
    CHECK(is_inf(empty.query(0, 100, 0, 100).value));
}

TEST_CASE("duplicate coordinates keep the smallest value") {
    const GridMin2D grid(std::vector<GridPoint>{{2, 2, 9}, {2, 2, 4}, {2, 2, 11}});
    const GridHit hit = grid.query(0, 4, 0, 4);
    CHECK(hit.value == 4);
    CHECK(hit.x == 2);
    CHECK(hit.y == 2);
}
