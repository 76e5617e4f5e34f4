#include "rectdiag/geometry.hpp"

#include <algorithm>

#include "rectdiag/intervals.hpp"

namespace rectdiag {

namespace {

// Slot kinds for the general-position scan. A corner on D identifies one
// x-value with one negated y-value; any other x / negated-y collision is
// rejected.
enum SlotKind { kLx, kUx, kNegUy, kNegLy };

}  // namespace

Family validate_family(std::vector<Rect> rects) {
    for (const Rect& r : rects) {
        if (r.l.x >= r.u.x || r.l.y >= r.u.y)
            throw FamilyError(FamilyErrorKind::DegenerateRect,
                              "degenerate rect id=" + std::to_string(r.id), r.id);
        if (r.w < 0)
            throw FamilyError(FamilyErrorKind::DegenerateRect,
                              "negative weight id=" + std::to_string(r.id), r.id);
        if (Family::anchor_a_x(r) > Family::anchor_b_x(r))
            throw FamilyError(FamilyErrorKind::NotDiagonalIntersecting,
                              "rect id=" + std::to_string(r.id) + " misses the diagonal", r.id);
    }

    // Corner coordinate distinctness.
    {
        std::vector<Coord> xs, ys;
        xs.reserve(rects.size() * 2);
        ys.reserve(rects.size() * 2);
        for (const Rect& r : rects) {
            xs.push_back(r.l.x);
            xs.push_back(r.u.x);
            ys.push_back(r.l.y);
            ys.push_back(r.u.y);
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (xs[i] == xs[i - 1])
                throw FamilyError(FamilyErrorKind::DegeneratePosition,
                                  "repeated x coordinate " + std::to_string(xs[i]), xs[i]);
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (ys[i] == ys[i - 1])
                throw FamilyError(FamilyErrorKind::DegeneratePosition,
                                  "repeated y coordinate " + std::to_string(ys[i]), ys[i]);
    }

    // Diagonal genericity: a corner x-coordinate may coincide with a negated
    // corner y-coordinate only when both belong to the same corner (that
    // corner then lies on D). This keeps anchor values pairwise distinct
    // across rects and DP strip boundaries away from every lower-left corner.
    {
        struct Slot {
            Coord v;
            int rect;
            SlotKind kind;
        };
        std::vector<Slot> slots;
        slots.reserve(rects.size() * 4);
        for (std::size_t i = 0; i < rects.size(); ++i) {
            const Rect& r = rects[i];
            slots.push_back({r.l.x, static_cast<int>(i), kLx});
            slots.push_back({r.u.x, static_cast<int>(i), kUx});
            slots.push_back({-r.u.y, static_cast<int>(i), kNegUy});
            slots.push_back({-r.l.y, static_cast<int>(i), kNegLy});
        }
        std::sort(slots.begin(), slots.end(),
                  [](const Slot& a, const Slot& b) { return a.v < b.v; });
        for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
            const Slot& s = slots[i];
            const Slot& t = slots[i + 1];
            if (s.v != t.v) continue;
            bool x_side_s = s.kind == kLx || s.kind == kUx;
            bool x_side_t = t.kind == kLx || t.kind == kUx;
            if (x_side_s == x_side_t) continue;  // already caught above
            // A coincidence within one rect puts one of its corners exactly
            // on D, which is fine; across rects it is rejected.
            if (s.rect != t.rect)
                throw FamilyError(FamilyErrorKind::DegeneratePosition,
                                  "corner x equals negated corner y at " + std::to_string(s.v),
                                  s.v);
        }
    }

    Family f;
    f.rects_ = std::move(rects);
    std::sort(f.rects_.begin(), f.rects_.end(), [](const Rect& a, const Rect& b) {
        return Family::anchor_a_x(a) < Family::anchor_a_x(b);
    });
    f.ax_.reserve(f.rects_.size());
    f.bx_.reserve(f.rects_.size());
    for (const Rect& r : f.rects_) {
        f.ax_.push_back(Family::anchor_a_x(r));
        f.bx_.push_back(Family::anchor_b_x(r));
    }
    return f;
}

std::string to_string(ClassLabel c) {
    switch (c) {
        case ClassLabel::Intersecting: return "intersecting";
        case ClassLabel::LowerIntersecting: return "lower-intersecting";
        case ClassLabel::SplittingUpper: return "splitting(upper)";
        case ClassLabel::SplittingLower: return "splitting(lower)";
        case ClassLabel::SplittingLeft: return "splitting(left)";
        case ClassLabel::SplittingRight: return "splitting(right)";
        case ClassLabel::CornerSeparated: return "corner-separated";
        case ClassLabel::Touching: return "touching";
    }
    return "?";
}

std::set<ClassLabel> classify(const Family& f) {
    std::set<ClassLabel> out;
    out.insert(ClassLabel::Intersecting);  // Family invariant

    const auto& rs = f.rects();
    bool lower = true;
    for (std::size_t i = 0; i < rs.size() && lower; ++i)
        for (std::size_t j = i + 1; j < rs.size() && lower; ++j)
            if (rects_intersect(rs[i], rs[j]) && !intersect_below_diagonal(rs[i], rs[j]))
                lower = false;
    if (lower) out.insert(ClassLabel::LowerIntersecting);

    auto all_of_rects = [&](auto pred) { return std::all_of(rs.begin(), rs.end(), pred); };
    if (all_of_rects([](const Rect& r) { return r.l.x <= -r.u.y && -r.u.y <= r.u.x; }))
        out.insert(ClassLabel::SplittingUpper);
    if (all_of_rects([](const Rect& r) { return r.l.x <= -r.l.y && -r.l.y <= r.u.x; }))
        out.insert(ClassLabel::SplittingLower);
    if (all_of_rects([](const Rect& r) { return r.l.y <= -r.l.x && -r.l.x <= r.u.y; }))
        out.insert(ClassLabel::SplittingLeft);
    if (all_of_rects([](const Rect& r) { return r.l.y <= -r.u.x && -r.u.x <= r.u.y; }))
        out.insert(ClassLabel::SplittingRight);

    // Corner-separated: some halfplane contains the same three corners of
    // every rect. Corners indexed ll, lr, ul, ur; try all four excluded
    // corners against both halfplanes.
    {
        auto corner = [](const Rect& r, int c) -> Point {
            switch (c) {
                case 0: return r.l;                 // ll
                case 1: return {r.u.x, r.l.y};      // lr
                case 2: return {r.l.x, r.u.y};      // ul
                default: return r.u;                // ur
            }
        };
        bool sep = false;
        for (int excluded = 0; excluded < 4 && !sep; ++excluded) {
            bool low = true, high = true;
            for (const Rect& r : rs) {
                for (int c = 0; c < 4; ++c) {
                    if (c == excluded) continue;
                    if (!below_diagonal(corner(r, c))) low = false;
                    if (!above_diagonal(corner(r, c))) high = false;
                }
            }
            sep = low || high;
        }
        if (sep) out.insert(ClassLabel::CornerSeparated);
    }

    if (!rs.empty() &&
        (all_of_rects([](const Rect& r) { return on_diagonal(r.u); }) ||
         all_of_rects([](const Rect& r) { return on_diagonal(r.l); })))
        out.insert(ClassLabel::Touching);

    return out;
}

IntersectionGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    IntersectionGraph g;
    g.n = n;
    g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        g.set(u, v);
    }
    return g;
}

IntersectionGraph intersection_graph(const std::vector<Rect>& rects) {
    IntersectionGraph g;
    g.n = static_cast<int>(rects.size());
    g.adj_.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (rects_intersect(rects[i], rects[j])) g.set(i, j);
    return g;
}

IntersectionGraph intersection_graph(const Family& f) { return intersection_graph(f.rects()); }

Family lower_trim(const Family& f) {
    auto cls = classify(f);
    if (!cls.count(ClassLabel::SplittingUpper) && !cls.count(ClassLabel::LowerIntersecting))
        throw PreconditionViolated("lower_trim requires a splitting(upper) or lower-intersecting family");

    bool has_point_toucher =
        std::any_of(f.rects().begin(), f.rects().end(),
                    [](const Rect& r) { return on_diagonal(r.l); });

    std::vector<Rect> out;
    out.reserve(f.size());
    const Coord s = has_point_toucher ? 4 : 1;
    for (const Rect& r : f.rects()) {
        Rect t = r;
        if (on_diagonal(r.l)) {
            // Region below D is the single point l; a unit square touching D
            // there meets exactly the rects containing l (scale 4 keeps every
            // other boundary at least 3 units away).
            t.l = {r.l.x * s - 1, r.l.y * s - 1};
            t.u = {r.l.x * s, r.l.y * s};
        } else {
            t.l = {r.l.x * s, r.l.y * s};
            t.u = {Family::anchor_b_x(r) * s, -Family::anchor_a_x(r) * s};
        }
        out.push_back(t);
    }
    return validate_family(std::move(out));
}

Rect reflect(const Rect& r) {
    Rect t = r;
    t.l = {-r.u.y, -r.u.x};
    t.u = {-r.l.y, -r.l.x};
    return t;
}

Family reflect(const Family& f) {
    std::vector<Rect> out;
    out.reserve(f.size());
    for (const Rect& r : f.rects()) out.push_back(reflect(r));
    return validate_family(std::move(out));
}

Rect rotate180(const Rect& r) {
    Rect t = r;
    t.l = {-r.u.x, -r.u.y};
    t.u = {-r.l.x, -r.l.y};
    return t;
}

GridifyResult gridify(const Family& f) {
    std::vector<Interval> xs, ys;
    xs.reserve(f.size());
    ys.reserve(f.size());
    for (const Rect& r : f.rects()) {
        xs.push_back({r.l.x, r.u.x, 1});
        ys.push_back({r.l.y, r.u.y, 1});
    }
    std::vector<Coord> px = interval_mhs(xs).points;
    std::vector<Coord> py = interval_mhs(ys).points;
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());

    GridifyResult res;
    const Coord mx = static_cast<Coord>(px.size());
    const Coord my = static_cast<Coord>(py.size());
    res.alpha = std::max<Coord>(1, std::max(mx, my));

    // The remap sends the k-th hitting point to k and is linear with slope 1
    // beyond the extreme points, so the trim window in original coordinates
    // has integer ends.
    auto trim_hi = [&](const std::vector<Coord>& p, Coord m) {
        return p.back() + (res.alpha - m);
    };
    const Coord txlo = px.front(), txhi = trim_hi(px, mx);
    const Coord tylo = py.front(), tyhi = trim_hi(py, my);

    // floor(phi(v)) for v >= p.front(), where phi maps p[k-1] -> k and is
    // piecewise linear between consecutive points.
    auto floor_phi = [](const std::vector<Coord>& p, Coord v) {
        auto it = std::upper_bound(p.begin(), p.end(), v);
        return static_cast<Coord>(it - p.begin());
    };
    auto ceil_phi = [&](const std::vector<Coord>& p, Coord v) {
        Coord m = static_cast<Coord>(p.size());
        if (v > p.back()) return m + (v - p.back());  // slope-1 extension
        Coord c = floor_phi(p, v);
        bool exact = std::binary_search(p.begin(), p.end(), v);
        return exact ? c : c + 1;
    };

    for (const Rect& r : f.rects()) {
        Rect t = r;  // trim in original coordinates
        t.l.x = std::max(r.l.x, txlo);
        t.u.x = std::min(r.u.x, txhi);
        t.l.y = std::max(r.l.y, tylo);
        t.u.y = std::min(r.u.y, tyhi);
        res.trimmed.push_back(t);

        Rect e = r;  // expand to grid corners in remapped coordinates
        e.l.x = std::max<Coord>(floor_phi(px, t.l.x), 1);
        e.u.x = std::min<Coord>(ceil_phi(px, t.u.x), res.alpha);
        e.l.y = std::max<Coord>(floor_phi(py, t.l.y), 1);
        e.u.y = std::min<Coord>(ceil_phi(py, t.u.y), res.alpha);
        res.rects.push_back(e);
    }
    return res;
}

}  // namespace rectdiag
