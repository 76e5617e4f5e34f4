#pragma once

#include <string>
#include <vector>

#include "rectdiag/geometry.hpp"

// Constructive hitting sets from the projection grid: the staircases F-, F+
// and F* give 2/3/4-approximate MHS depending on the family class.

namespace rectdiag {

struct GridPoints {
    std::vector<Coord> px, py;  // projection hitting sets, ascending
    std::vector<Point> points;  // px x py
};

GridPoints grid_points(const Family& f);

struct Staircases {
    std::vector<Point> fminus;  // maximal points of P below D
    std::vector<Point> fplus;   // strictly minimal points of P above D
    std::vector<Point> fstar;   // weakly minimal points of P above D
};

Staircases staircases(const GridPoints& grid);

struct HitSet {
    std::vector<Point> points;
    std::string provenance;
};

bool is_hitting_set(const Family& f, const std::vector<Point>& points);

// Touching -> F-; lower-intersecting -> trim then F- u F*; otherwise F- u F+.
HitSet approx_mhs(const Family& f);

}  // namespace rectdiag
