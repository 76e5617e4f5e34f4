#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rectdiag/exact.hpp"
#include "rectdiag/generators.hpp"
#include "rectdiag/staircase.hpp"

using namespace rectdiag;

namespace {

std::int64_t l1_to_diagonal(const Point& p) { return std::abs(p.x + p.y); }

}  // namespace

TEST_CASE("grid points hit every rectangle") {
    Family one = validate_family({Rect{0, {-4, 1}, {2, 6}, 1}});
    GridPoints g = grid_points(one);
    CHECK(g.points.size() == 1);
    CHECK(one[0].contains(g.points[0]));

    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        Family f = gen_random(RandomKind::Intersecting, 1 + static_cast<int>(seed % 10), seed);
        GridPoints grid = grid_points(f);
        CHECK(is_hitting_set(f, grid.points));
        MisResult mis = mis_exact(intersection_graph(f));
        CHECK(static_cast<std::int64_t>(grid.points.size()) <= mis.value * mis.value);
        CHECK(mis.value >= static_cast<std::int64_t>(
                               std::max(grid.px.size(), grid.py.size())));
    }
}

TEST_CASE("staircase size bounds") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Family f = gen_random(RandomKind::Intersecting, 9, seed);
        GridPoints grid = grid_points(f);
        Staircases s = staircases(grid);
        std::size_t bound = grid.px.size() + grid.py.size() - 1;
        CHECK(s.fminus.size() <= bound);
        CHECK(s.fplus.size() <= bound);
        CHECK(s.fstar.size() <= std::max(grid.px.size(), grid.py.size()));
        // F* is the weakly-minimal subset of F+
        for (const Point& p : s.fstar)
            CHECK(std::find(s.fplus.begin(), s.fplus.end(), p) != s.fplus.end());
    }
}

TEST_CASE("p1 of every below-hit rect lands on F-") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Family f = gen_random(RandomKind::Intersecting, 8, seed);
        GridPoints grid = grid_points(f);
        Staircases s = staircases(grid);
        for (const Rect& r : f.rects()) {
            std::optional<Point> best;
            for (const Point& p : grid.points) {
                if (!r.contains(p) || !below_diagonal(p)) continue;
                if (!best || l1_to_diagonal(p) < l1_to_diagonal(*best) ||
                    (l1_to_diagonal(p) == l1_to_diagonal(*best) && p.x < best->x))
                    best = p;
            }
            if (best)
                CHECK(std::find(s.fminus.begin(), s.fminus.end(), *best) != s.fminus.end());
        }
    }
}

TEST_CASE("p2 of corner-separated rects lands on F*") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Family f = lower_trim(gen_random(RandomKind::Lower, 8, seed));
        GridPoints grid = grid_points(f);
        Staircases s = staircases(grid);
        for (const Rect& r : f.rects()) {
            std::optional<Point> best;
            for (const Point& p : grid.points) {
                if (!r.contains(p) || !above_diagonal(p)) continue;
                if (!best || l1_to_diagonal(p) < l1_to_diagonal(*best) ||
                    (l1_to_diagonal(p) == l1_to_diagonal(*best) && p.x < best->x))
                    best = p;
            }
            if (best)
                CHECK(std::find(s.fstar.begin(), s.fstar.end(), *best) != s.fstar.end());
        }
    }
}

TEST_CASE("approx_mhs validity and class-specific bounds") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        int n = 1 + static_cast<int>(seed % 10);

        Family t = gen_random(RandomKind::Touching, n, seed);
        HitSet ht = approx_mhs(t);
        CHECK(ht.provenance == "fminus");
        CHECK(is_hitting_set(t, ht.points));
        std::int64_t mis_t = mis_exact(intersection_graph(t)).value;
        CHECK(static_cast<std::int64_t>(ht.points.size()) <= 2 * mis_t - 1);

        Family l = gen_random(RandomKind::Lower, n, seed);
        HitSet hl = approx_mhs(l);
        CHECK(hl.provenance == "fminus+fstar");
        CHECK(is_hitting_set(l, hl.points));
        std::int64_t mis_l = mis_exact(intersection_graph(l)).value;
        CHECK(static_cast<std::int64_t>(hl.points.size()) <= 3 * mis_l - 1);

        Family i = gen_random(RandomKind::Intersecting, n, seed);
        HitSet hi = approx_mhs(i);
        CHECK(is_hitting_set(i, hi.points));
        std::int64_t mis_i = mis_exact(intersection_graph(i)).value;
        CHECK(static_cast<std::int64_t>(hi.points.size()) <= 4 * mis_i - 2);
    }
}

TEST_CASE("approx_mhs handles lower-left touching families by reflection") {
    Family t = gen_random(RandomKind::Touching, 7, 11);
    Family lt = reflect(t);  // all lower-left corners on D
    REQUIRE(classify(lt).count(ClassLabel::Touching));
    HitSet h = approx_mhs(lt);
    CHECK(is_hitting_set(lt, h.points));
    std::int64_t mis = mis_exact(intersection_graph(lt)).value;
    CHECK(static_cast<std::int64_t>(h.points.size()) <= 2 * mis - 1);
}

TEST_CASE("is_hitting_set basics") {
    Family empty = validate_family({});
    CHECK(is_hitting_set(empty, {}));
    Family one = validate_family({Rect{0, {-4, 1}, {2, 6}, 1}});
    CHECK(is_hitting_set(one, {Point{-1, 3}}));
    CHECK_FALSE(is_hitting_set(one, {Point{5, 5}}));
}
