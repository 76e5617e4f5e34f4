#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rectdiag/geometry.hpp"

// Quadratic-time maximum weight independent set for diagonal-lower-
// intersecting families, via dynamic programming over harpoon regions, plus
// the derived 2-approximation for general diagonal-intersecting families.

namespace rectdiag {

class NotLowerIntersecting : public std::runtime_error {
public:
    NotLowerIntersecting() : std::runtime_error("family is not diagonal-lower-intersecting") {}
};

struct DpStats {
    std::uint64_t cells = 0;                 // table cells evaluated
    std::uint64_t candidate_iterations = 0;  // inner loop bodies executed
    std::uint64_t work() const { return cells + candidate_iterations; }
};

struct WmisResult {
    Weight weight = 0;
    std::vector<int> chosen;  // indices into f.rects(), sorted
    DpStats stats;
};

// Containment of rect k's below-diagonal region in harpoon H_{i,j}.
// Ids live in 0..n+1 where 0 and n+1 are the dummy rects capping the
// diagonal and id t in 1..n is f.rects()[t-1]. i<j selects the horizontal
// harpoon, i>j the vertical one. k in {i,j} is false by convention.
bool rect_in_harpoon(const Family& f, int k, int i, int j);

// The two dummy rects as placed by the DP (useful for tests/inspection).
std::pair<Rect, Rect> dp_dummies(const Family& f);

// Strict onion ordering: i dominated by j (disjoint and l^i < l^j pointwise).
bool onion_dominates(const Family& f, int i, int j);

// Exact WMIS. Pre: classify(f) includes lower-intersecting.
WmisResult wmis_lower_intersecting(const Family& f);

// 2-approximation for any diagonal-intersecting family: split into rects
// whose upper side meets D and the rest (their left side meets D), solve
// each side exactly, return the heavier.
WmisResult wmis_2approx(const Family& f);

}  // namespace rectdiag
