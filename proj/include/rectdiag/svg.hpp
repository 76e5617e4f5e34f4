#pragma once

#include <optional>
#include <string>

#include "rectdiag/geometry.hpp"
#include "rectdiag/staircase.hpp"

namespace rectdiag {

struct RenderOptions {
    bool staircases = false;  // overlay F- (triangles), F+ (crosses), F* (circles)
};

// Deterministic SVG 1.1 text: one <rect> per rectangle, the diagonal as a
// line across the view box, optional staircase glyphs.
std::string render_svg(const Family& f, const RenderOptions& opt = {});

}  // namespace rectdiag
