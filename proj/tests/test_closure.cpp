#include <doctest.h>

#include <algorithm>
#include <set>

#include "medgeo/l1_points.hpp"
#include "medgeo/median_ops.hpp"
#include "test_helpers.hpp"

using namespace medgeo;
using testing::points_of;

namespace {

// Four points at pairwise l1-distance 2 in Q^7 whose median hull
// interpolates between a 5-point star (x = 0) and a cube (x = 1).
L1Points y_family(const Rat& x) {
    Rat h = x / Rat(2), r = Rat(1) - x, z(0);
    L1Points p;
    p.dim = 7;
    p.points = {
        {h, h, h, r, z, z, z},
        {-h, -h, h, z, r, z, z},
        {h, -h, -h, z, z, r, z},
        {-h, h, -h, z, z, z, r},
    };
    return p;
}

} // namespace

TEST_CASE("median hulls of the Y family") {
    struct Case {
        Rat x;
        int expected;
    };
    for (const Case& c : {Case{Rat(0), 5}, Case{Rat(1, 2), 12}, Case{Rat(1), 8}}) {
        L1Points y = y_family(c.x);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(l1_dist(y.points[i], y.points[j]) == Rat(2));
        MedianClosureResult res = median_closure(y);
        CHECK(res.points.size() == c.expected);
        CHECK(is_median(res.metric).is_median);
        // generators stay at the front
        for (int i = 0; i < 4; ++i) CHECK(res.points.points[i] == y.points[i]);
    }
}

TEST_CASE("closure agrees with a naive fixpoint oracle") {
    L1Points gen = points_of({{0, 0}, {2, 1}, {1, 2}, {2, 2}});

    // oracle: saturate without any round bookkeeping
    std::set<std::vector<Rat>> want(gen.points.begin(), gen.points.end());
    for (;;) {
        std::set<std::vector<Rat>> next = want;
        for (const auto& a : want)
            for (const auto& b : want)
                for (const auto& c : want) {
                    std::vector<Rat> m = {median3(a[0], b[0], c[0]), median3(a[1], b[1], c[1])};
                    next.insert(m);
                }
        if (next.size() == want.size()) break;
        want = std::move(next);
    }

    MedianClosureResult res = median_closure(gen);
    std::set<std::vector<Rat>> got(res.points.points.begin(), res.points.points.end());
    CHECK(got == want);
}

TEST_CASE("closure output is deterministic and deduplicated") {
    L1Points gen = points_of({{1, 1}, {0, 3}, {1, 1}, {3, 0}});
    MedianClosureResult a = median_closure(gen);
    MedianClosureResult b = median_closure(gen);
    CHECK(a.points.points == b.points.points);
    // the duplicate generator is dropped
    std::set<std::vector<Rat>> uniq(a.points.points.begin(), a.points.points.end());
    CHECK(uniq.size() == a.points.points.size());
    CHECK(a.metric.is_strict());
}

TEST_CASE("closure cap guards runaway inputs") {
    L1Points gen = testing::grid_points(3, 3);
    CHECK_THROWS_AS(median_closure(gen, 4), cap_exceeded);
}

TEST_CASE("l1 metric construction rejects duplicates unless pseudo") {
    L1Points dup = points_of({{0, 0}, {0, 0}});
    CHECK_THROWS_AS(l1_metric(dup), invalid_input);
    CHECK_NOTHROW(l1_metric(dup, true));
}
