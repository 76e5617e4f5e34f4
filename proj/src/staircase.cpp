#include "rectdiag/staircase.hpp"

#include <algorithm>

#include "rectdiag/intervals.hpp"

namespace rectdiag {

GridPoints grid_points(const Family& f) {
    std::vector<Interval> xs, ys;
    xs.reserve(f.size());
    ys.reserve(f.size());
    for (const Rect& r : f.rects()) {
        xs.push_back({r.l.x, r.u.x, 1});
        ys.push_back({r.l.y, r.u.y, 1});
    }
    GridPoints g;
    g.px = interval_mhs(xs).points;
    g.py = interval_mhs(ys).points;
    std::sort(g.px.begin(), g.px.end());
    std::sort(g.py.begin(), g.py.end());
    g.points.reserve(g.px.size() * g.py.size());
    for (Coord x : g.px)
        for (Coord y : g.py) g.points.push_back({x, y});
    return g;
}

Staircases staircases(const GridPoints& grid) {
    Staircases s;
    std::vector<Point> below, above;
    for (const Point& p : grid.points) {
        if (below_diagonal(p)) below.push_back(p);
        if (above_diagonal(p)) above.push_back(p);  // on-D points land in both
    }
    for (const Point& p : below) {
        bool dominated = false;
        for (const Point& q : below)
            if (!(q == p) && p.x < q.x && p.y < q.y) {
                dominated = true;
                break;
            }
        if (!dominated) s.fminus.push_back(p);
    }
    for (const Point& p : above) {
        bool strictly = false, weakly = false;
        for (const Point& q : above) {
            if (q == p) continue;
            if (q.x < p.x && q.y < p.y) strictly = true;
            if (q.x <= p.x && q.y <= p.y) weakly = true;
        }
        if (!strictly) s.fplus.push_back(p);
        if (!weakly) s.fstar.push_back(p);
    }
    return s;
}

bool is_hitting_set(const Family& f, const std::vector<Point>& points) {
    for (const Rect& r : f.rects()) {
        bool hit = false;
        for (const Point& p : points)
            if (r.contains(p)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

namespace {

void append_unique(std::vector<Point>& out, const std::vector<Point>& add) {
    for (const Point& p : add)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

}  // namespace

HitSet approx_mhs(const Family& f) {
    HitSet hs;
    if (f.size() == 0) {
        hs.provenance = "empty";
        return hs;
    }
    auto cls = classify(f);

    if (cls.count(ClassLabel::Touching)) {
        // Normalize lower-left touching families to upper-right ones.
        bool l_touching = !on_diagonal(f[0].u);
        Family work = l_touching ? reflect(f) : f;
        Staircases s = staircases(grid_points(work));
        hs.points = s.fminus;
        if (l_touching)
            for (Point& p : hs.points) p = {-p.y, -p.x};
        hs.provenance = "fminus";
        return hs;
    }

    if (cls.count(ClassLabel::LowerIntersecting)) {
        Family trimmed = lower_trim(f);
        Staircases s = staircases(grid_points(trimmed));
        hs.points = s.fminus;
        append_unique(hs.points, s.fstar);
        // lower_trim scales by 4 when the family has lower-left point
        // touchers; ceil-divide the points back. A point in a scaled rect has
        // coordinates >= 4 l - 1, so the rounded point stays inside the
        // original rect it hits.
        bool scaled = std::any_of(f.rects().begin(), f.rects().end(),
                                  [](const Rect& r) { return on_diagonal(r.l); });
        if (scaled) {
            auto ceil_div4 = [](Coord v) { return v >= 0 ? (v + 3) / 4 : -((-v) / 4); };
            for (Point& p : hs.points) p = {ceil_div4(p.x), ceil_div4(p.y)};
        }
        hs.provenance = "fminus+fstar";
        return hs;
    }

    Staircases s = staircases(grid_points(f));
    hs.points = s.fminus;
    append_unique(hs.points, s.fplus);
    hs.provenance = "fminus+fplus";
    return hs;
}

}  // namespace rectdiag
