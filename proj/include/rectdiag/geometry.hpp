#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Core types for families of closed axis-parallel rectangles that all meet
// the diagonal line D: y = -x. Coordinates are exact signed 64-bit integers.

namespace rectdiag {

using Coord = std::int64_t;
using Weight = std::int64_t;

struct Point {
    Coord x = 0;
    Coord y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// y <= -x, closed lower halfplane of D.
inline bool below_diagonal(const Point& p) { return p.y <= -p.x; }
inline bool above_diagonal(const Point& p) { return p.y >= -p.x; }
inline bool on_diagonal(const Point& p) { return p.y == -p.x; }

struct Rect {
    int id = 0;
    Point l;  // lower-left corner
    Point u;  // upper-right corner
    Weight w = 1;

    bool contains(const Point& p) const {
        return l.x <= p.x && p.x <= u.x && l.y <= p.y && p.y <= u.y;
    }
    friend bool operator==(const Rect&, const Rect&) = default;
};

inline bool rects_intersect(const Rect& a, const Rect& b) {
    return a.l.x <= b.u.x && b.l.x <= a.u.x && a.l.y <= b.u.y && b.l.y <= a.u.y;
}

// Closed intersection of two rects shares a point of the lower halfplane iff
// the lower-left corner of the overlap box is on or below D.
inline bool intersect_below_diagonal(const Rect& a, const Rect& b) {
    if (!rects_intersect(a, b)) return false;
    Coord x = std::max(a.l.x, b.l.x);
    Coord y = std::max(a.l.y, b.l.y);
    return y <= -x;
}

enum class FamilyErrorKind {
    DegenerateRect,          // l.x >= u.x or l.y >= u.y
    NotDiagonalIntersecting, // rect misses y = -x
    DegeneratePosition,      // repeated coordinate / diagonal coincidence
};

class FamilyError : public std::runtime_error {
public:
    FamilyError(FamilyErrorKind kind, std::string msg, Coord value)
        : std::runtime_error(std::move(msg)), kind(kind), value(value) {}
    FamilyErrorKind kind;
    Coord value;  // offending rect id or coordinate
};

// A validated family: every rect meets D, corner coordinates are in general
// position (see validate_family), rects sorted by the x of the upper anchor.
class Family {
public:
    // anchors: a = higher intersection of boundary(r) with D, b = lower one.
    static Coord anchor_a_x(const Rect& r) { return std::max(r.l.x, -r.u.y); }
    static Coord anchor_b_x(const Rect& r) { return std::min(r.u.x, -r.l.y); }

    const std::vector<Rect>& rects() const { return rects_; }
    std::size_t size() const { return rects_.size(); }
    const Rect& operator[](std::size_t i) const { return rects_[i]; }

    Point a(std::size_t i) const { return {ax_[i], -ax_[i]}; }
    Point b(std::size_t i) const { return {bx_[i], -bx_[i]}; }
    Coord a_x(std::size_t i) const { return ax_[i]; }
    Coord b_x(std::size_t i) const { return bx_[i]; }

private:
    friend Family validate_family(std::vector<Rect> rects);
    std::vector<Rect> rects_;     // sorted by ax_ increasing
    std::vector<Coord> ax_, bx_;  // anchor x coordinates, parallel to rects_
};

// Validates and normalizes a rect list into a Family.
//
// General position here means: all 2n corner x-coordinates distinct, all 2n
// corner y-coordinates distinct, and no corner x equals a negated corner y of
// a *different* corner. A corner exactly on D (l or u of a single rect) is
// allowed; those are the touching configurations the paper builds on. The
// extra diagonal condition makes anchor orders and the DP strip boundaries
// unambiguous, which the corner-only condition does not.
Family validate_family(std::vector<Rect> rects);

enum class ClassLabel {
    Intersecting,
    LowerIntersecting,
    SplittingUpper,
    SplittingLower,
    SplittingLeft,
    SplittingRight,
    CornerSeparated,
    Touching,
};

std::string to_string(ClassLabel c);

std::set<ClassLabel> classify(const Family& f);

struct IntersectionGraph {
    int n = 0;
    std::vector<char> adj_;  // n*n symmetric, diagonal false

    bool adj(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n + j] != 0; }
    void set(int i, int j) {
        adj_[static_cast<std::size_t>(i) * n + j] = 1;
        adj_[static_cast<std::size_t>(j) * n + i] = 1;
    }
    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n; ++u) d += adj(v, u);
        return d;
    }
    std::size_t edge_count() const {
        std::size_t m = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m += adj(i, j);
        return m;
    }
    friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

IntersectionGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
IntersectionGraph intersection_graph(const Family& f);
// Closed-rect adjacency for raw rect lists (degenerate rects allowed).
IntersectionGraph intersection_graph(const std::vector<Rect>& rects);

// Replaces each rect by the minimal rect containing its part below D.
// Pre: classify(f) includes SplittingUpper or LowerIntersecting. Rects whose
// below-D region is a single point (lower-left corner on D) are replaced by
// a small square touching D at that point; the whole family is scaled by 4
// in that case so the replacement squares cannot meet anything new.
Family lower_trim(const Family& f);

// (x, y) -> (-y, -x): reflection across D. Fixes D pointwise, preserves the
// intersection graph, swaps upper<->left and lower<->right sides.
Family reflect(const Family& f);
Rect reflect(const Rect& r);

// (x, y) -> (-x, -y): half-turn about the origin; maps D to itself reversing
// the order along it.
Rect rotate180(const Rect& r);

class PreconditionViolated : public std::runtime_error {
public:
    explicit PreconditionViolated(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridifyResult {
    std::vector<Rect> rects;  // corners in [1, alpha]^2; may be degenerate
    Coord alpha = 0;
    // The family trimmed (in original coordinates) to the preimage of
    // [1, alpha]^2; exposed so the graph-preservation property is testable.
    std::vector<Rect> trimmed;
};

// Remaps the plane so the projection hitting sets become 1..|P|, trims to
// [1, alpha]^2 and expands corners outward to integers. Every independent set
// of the result is independent in the input.
GridifyResult gridify(const Family& f);

}  // namespace rectdiag
