#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rectdiag/exact.hpp"
#include "rectdiag/generators.hpp"
#include "rectdiag/harpoon.hpp"
#include "rectdiag/json_io.hpp"
#include "rectdiag/orderings.hpp"
#include "rectdiag/sat_reduction.hpp"
#include "rectdiag/staircase.hpp"
#include "rectdiag/svg.hpp"

namespace py = pybind11;
using namespace rectdiag;

namespace {

Family family_from_tuples(
    const std::vector<std::tuple<int, Coord, Coord, Coord, Coord, Weight>>& rects) {
    std::vector<Rect> rs;
    rs.reserve(rects.size());
    for (const auto& [id, lx, ly, ux, uy, w] : rects) rs.push_back({id, {lx, ly}, {ux, uy}, w});
    return validate_family(std::move(rs));
}

py::list family_tuples(const Family& f) {
    py::list out;
    for (const Rect& r : f.rects())
        out.append(py::make_tuple(r.id, r.l.x, r.l.y, r.u.x, r.u.y, r.w));
    return out;
}

py::list point_tuples(const std::vector<Point>& pts) {
    py::list out;
    for (const Point& p : pts) out.append(py::make_tuple(p.x, p.y));
    return out;
}

}  // namespace

PYBIND11_MODULE(_rectdiag, m) {
    m.doc() = "independent and hitting sets of axis-parallel rectangles meeting y = -x";

    py::class_<Family>(m, "Family")
        .def(py::init(&family_from_tuples),
             "Validate a list of (id, lx, ly, ux, uy, w) tuples into a family")
        .def("__len__", &Family::size)
        .def("rects", &family_tuples)
        .def("to_json", &family_to_json)
        .def_static("from_json", &family_from_json)
        .def("classes",
             [](const Family& f) {
                 py::list out;
                 for (ClassLabel c : classify(f)) out.append(to_string(c));
                 return out;
             })
        .def("intersection_edges", [](const Family& f) {
            IntersectionGraph g = intersection_graph(f);
            py::list out;
            for (int i = 0; i < g.n; ++i)
                for (int j = i + 1; j < g.n; ++j)
                    if (g.adj(i, j)) out.append(py::make_tuple(i, j));
            return out;
        });

    m.def("gen_rk", &gen_rk, py::arg("k"));
    m.def(
        "gen_named",
        [](const std::string& kind) {
            if (kind == "c5") return gen_named(NamedFamily::C5);
            if (kind == "double_c6") return gen_named(NamedFamily::DoubleC6);
            if (kind == "cube") return gen_named(NamedFamily::Cube);
            throw std::invalid_argument("kind must be c5, double_c6 or cube");
        },
        py::arg("kind"));
    m.def(
        "gen_random",
        [](const std::string& kind, int n, std::uint64_t seed) {
            if (kind == "touching") return gen_random(RandomKind::Touching, n, seed);
            if (kind == "lower") return gen_random(RandomKind::Lower, n, seed);
            if (kind == "intersecting") return gen_random(RandomKind::Intersecting, n, seed);
            throw std::invalid_argument("kind must be touching, lower or intersecting");
        },
        py::arg("kind"), py::arg("n"), py::arg("seed"));

    m.def(
        "wmis_lower_intersecting",
        [](const Family& f) {
            WmisResult r = wmis_lower_intersecting(f);
            return py::make_tuple(r.weight, r.chosen);
        },
        "Exact maximum weight independent set for lower-intersecting families");
    m.def("wmis_2approx", [](const Family& f) {
        WmisResult r = wmis_2approx(f);
        return py::make_tuple(r.weight, r.chosen);
    });
    m.def(
        "mis_exact",
        [](const Family& f) {
            MisResult r = mis_exact(intersection_graph(f));
            return py::make_tuple(r.value, r.vertices);
        },
        "Exact maximum independent set by branch and bound");
    m.def("wmis_exact", [](const Family& f) {
        std::vector<Weight> w(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) w[i] = f[i].w;
        MisResult r = wmis_exact(intersection_graph(f), w);
        return py::make_tuple(r.value, r.vertices);
    });
    m.def("mhs_exact", [](const Family& f) {
        MhsResult r = mhs_exact(f);
        return py::make_tuple(r.size, point_tuples(r.points));
    });
    m.def("approx_mhs", [](const Family& f) {
        HitSet h = approx_mhs(f);
        return py::make_tuple(point_tuples(h.points), h.provenance);
    });
    m.def("is_hitting_set", [](const Family& f, const std::vector<std::pair<Coord, Coord>>& pts) {
        std::vector<Point> points;
        points.reserve(pts.size());
        for (auto [x, y] : pts) points.push_back({x, y});
        return is_hitting_set(f, points);
    });
    m.def("gap_report", [](const Family& f) {
        GapReport rep = gap_report(f);
        py::dict out;
        out["n"] = rep.n;
        out["mis_lb"] = rep.mis_lb;
        out["mis_ub"] = rep.mis_ub;
        out["mhs_lb"] = rep.mhs_lb;
        out["mhs_ub"] = rep.mhs_ub;
        out["ratio_lb"] = rep.ratio_lb;
        return out;
    });
    m.def("gridify", [](const Family& f) {
        GridifyResult g = gridify(f);
        py::list rects;
        for (const Rect& r : g.rects)
            rects.append(py::make_tuple(r.id, r.l.x, r.l.y, r.u.x, r.u.y, r.w));
        return py::make_tuple(g.alpha, rects);
    });

    m.def(
        "find_touching_order",
        [](int n, const std::vector<std::pair<int, int>>& edges) -> py::object {
            OrderSearchResult r = find_touching_order(make_graph(n, edges));
            if (!r.order) return py::none();
            return py::cast(r.order->perm);
        },
        py::arg("n"), py::arg("edges"));
    m.def("check_crossing_condition",
          [](int n, const std::vector<std::pair<int, int>>& edges,
             const std::vector<int>& order) -> py::object {
              auto bad = check_crossing_condition(make_graph(n, edges), VertexOrder{order});
              if (!bad) return py::none();
              return py::cast(std::vector<int>(bad->begin(), bad->end()));
          });
    m.def("order_to_representation",
          [](int n, const std::vector<std::pair<int, int>>& edges,
             const std::vector<int>& order) {
              return order_to_representation(make_graph(n, edges), VertexOrder{order});
          });

    m.def(
        "reduce_sat",
        [](const std::vector<std::string>& vars,
           const std::vector<std::pair<std::vector<int>, std::string>>& clauses) {
            CombLayout l;
            l.vars = vars;
            for (const auto& [lits, side] : clauses) {
                if (lits.size() != 3) throw std::invalid_argument("clauses take 3 literals");
                CombClause c;
                std::copy(lits.begin(), lits.end(), c.lits.begin());
                c.above = side == "above";
                l.clauses.push_back(c);
            }
            ReducedInstance inst = reduce(l);
            return py::make_tuple(inst.family, inst.target);
        },
        py::arg("vars"), py::arg("clauses"),
        "Planar 3-SAT comb layout to rectangles; satisfiable iff MIS reaches the target");

    m.def("render_svg", [](const Family& f, bool staircases) {
        RenderOptions opt;
        opt.staircases = staircases;
        return render_svg(f, opt);
    }, py::arg("family"), py::arg("staircases") = false);
}
