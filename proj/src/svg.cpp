#include "rectdiag/svg.hpp"

#include <algorithm>
#include <sstream>

namespace rectdiag {

namespace {

// Screen coordinates flip y so the diagonal y=-x renders down-right.
struct View {
    Coord x0, y0, x1, y1;  // world bbox with margin
    Coord sx(Coord x) const { return x - x0; }
    Coord sy(Coord y) const { return y1 - y; }
};

}  // namespace

std::string render_svg(const Family& f, const RenderOptions& opt) {
    Coord x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    bool first = true;
    for (const Rect& r : f.rects()) {
        if (first) {
            x0 = r.l.x;
            y0 = r.l.y;
            x1 = r.u.x;
            y1 = r.u.y;
            first = false;
        }
        x0 = std::min(x0, r.l.x);
        y0 = std::min(y0, r.l.y);
        x1 = std::max(x1, r.u.x);
        y1 = std::max(y1, r.u.y);
    }
    const Coord margin = std::max<Coord>(1, std::max(x1 - x0, y1 - y0) / 10);
    View v{x0 - margin, y0 - margin, x1 + margin, y1 + margin};
    const Coord w = v.x1 - v.x0, h = v.y1 - v.y0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << w
        << ' ' << h << "\">\n";
    // diagonal y = -x clipped to the view box
    {
        // endpoints where y=-x meets the box edges
        Coord xa = std::max(v.x0, -v.y1), xb = std::min(v.x1, -v.y0);
        out << "  <line x1=\"" << v.sx(xa) << "\" y1=\"" << v.sy(-xa) << "\" x2=\"" << v.sx(xb)
            << "\" y2=\"" << v.sy(-xb)
            << "\" stroke=\"#888\" stroke-dasharray=\"4 2\" stroke-width=\"1\"/>\n";
    }
    for (const Rect& r : f.rects()) {
        out << "  <rect x=\"" << v.sx(r.l.x) << "\" y=\"" << v.sy(r.u.y) << "\" width=\""
            << (r.u.x - r.l.x) << "\" height=\"" << (r.u.y - r.l.y)
            << "\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#20507a\" stroke-width=\"1\"/>\n";
    }
    if (opt.staircases && f.size() > 0) {
        Staircases s = staircases(grid_points(f));
        const Coord g = std::max<Coord>(1, margin / 4);
        for (const Point& p : s.fminus) {
            out << "  <polygon points=\"" << v.sx(p.x) << ',' << (v.sy(p.y) - g) << ' '
                << (v.sx(p.x) - g) << ',' << (v.sy(p.y) + g) << ' ' << (v.sx(p.x) + g) << ','
                << (v.sy(p.y) + g) << "\" fill=\"#2a7f2a\"/>\n";
        }
        for (const Point& p : s.fplus) {
            out << "  <path d=\"M" << (v.sx(p.x) - g) << ' ' << (v.sy(p.y) - g) << " L"
                << (v.sx(p.x) + g) << ' ' << (v.sy(p.y) + g) << " M" << (v.sx(p.x) - g) << ' '
                << (v.sy(p.y) + g) << " L" << (v.sx(p.x) + g) << ' ' << (v.sy(p.y) - g)
                << "\" stroke=\"#c23\" stroke-width=\"1\"/>\n";
        }
        for (const Point& p : s.fstar) {
            out << "  <circle cx=\"" << v.sx(p.x) << "\" cy=\"" << v.sy(p.y) << "\" r=\"" << g
                << "\" fill=\"none\" stroke=\"#7a26a8\" stroke-width=\"1\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace rectdiag
