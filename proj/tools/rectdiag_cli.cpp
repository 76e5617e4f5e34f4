// Command-line surface: generators, solvers, hitting sets, the SAT
// reduction, order checks, gridification and SVG rendering. Families, graphs
// and comb layouts travel as JSON on stdin/stdout so subcommands compose.
#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "rectdiag/exact.hpp"
#include "rectdiag/generators.hpp"
#include "rectdiag/harpoon.hpp"
#include "rectdiag/json_io.hpp"
#include "rectdiag/orderings.hpp"
#include "rectdiag/sat_reduction.hpp"
#include "rectdiag/staircase.hpp"
#include "rectdiag/svg.hpp"

namespace fs = std::filesystem;
using namespace rectdiag;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const Point& p : pts) a.push_back({p.x, p.y});
    return a;
}

struct GapRow {
    std::string instance;
    std::size_t n = 0;
    GapReport rep;
};

std::string gap_csv_row(const GapRow& r) {
    std::ostringstream out;
    out << r.instance << ',' << r.n << ',' << r.rep.mis_lb << ',' << r.rep.mis_ub << ','
        << r.rep.mhs_lb << ',' << r.rep.mhs_ub << ',' << r.rep.ratio_lb;
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent and hitting sets of rectangles intersecting the diagonal"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "machine-readable errors on stderr");

    std::string in_path = "-", out_path = "-", what = "mis", kind = "rk";
    std::string roles_path;
    int k = 4, n = 10;
    std::uint64_t seed = 1, budget = 0;
    bool overlays = false;
    int jobs = 0;

    auto* gen = app.add_subcommand("gen", "generate a family as JSON");
    gen->add_option("--kind", kind, "rk|c5|double_c6|cube|touching|lower|intersecting");
    gen->add_option("--k", k, "layers for rk");
    gen->add_option("--n", n, "size for random kinds");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--out", out_path);

    auto* cls = app.add_subcommand("classify", "print class labels of a family");
    cls->add_option("-i,--in", in_path);

    auto* swmis = app.add_subcommand("solve-wmis", "exact WMIS via the harpoon DP");
    swmis->add_option("-i,--in", in_path);

    auto* awmis = app.add_subcommand("approx-wmis", "2-approximate WMIS");
    awmis->add_option("-i,--in", in_path);

    auto* sexact = app.add_subcommand("solve-exact", "branch-and-bound MIS/WMIS/MHS");
    sexact->add_option("-i,--in", in_path);
    sexact->add_option("--what", what, "mis|wmis|mhs");
    sexact->add_option("--budget", budget, "node budget override");

    auto* amhs = app.add_subcommand("approx-mhs", "staircase hitting set");
    amhs->add_option("-i,--in", in_path);

    auto* gap = app.add_subcommand("gap-report", "CSV duality-gap report over families");
    std::vector<std::string> gap_inputs;
    gap->add_option("inputs", gap_inputs, "family JSON files or directories (default: stdin)");
    gap->add_option("-o,--out", out_path);
    gap->add_option("-j,--jobs", jobs, "worker threads (default: hardware)");
    gap->add_option("--budget", budget);

    auto* rsat = app.add_subcommand("reduce-sat", "comb layout -> rectangle family");
    rsat->add_option("-i,--in", in_path);
    rsat->add_option("-o,--out", out_path);
    rsat->add_option("--roles", roles_path, "roles sidecar output file");

    auto* chk = app.add_subcommand("check-order", "crossing condition for a given order");
    chk->add_option("-i,--in", in_path);
    std::vector<int> order_arg;
    chk->add_option("--order", order_arg, "vertex order (default: identity)");

    auto* find = app.add_subcommand("find-order", "search for a touching order");
    find->add_option("-i,--in", in_path);
    find->add_option("--budget", budget);

    auto* grid = app.add_subcommand("gridify", "remap corners into [1,alpha]^2");
    grid->add_option("-i,--in", in_path);
    grid->add_option("-o,--out", out_path);

    auto* rnd = app.add_subcommand("render", "SVG drawing of a family");
    rnd->add_option("-i,--in", in_path);
    rnd->add_option("-o,--out", out_path);
    rnd->add_flag("--staircases", overlays, "overlay F-/F+/F* glyphs");

    CLI11_PARSE(app, argc, argv);

    auto budget_opt = [&]() -> std::optional<std::uint64_t> {
        if (budget > 0) return budget;
        return std::nullopt;
    };

    try {
        if (gen->parsed()) {
            Family f = [&] {
                if (kind == "rk") return gen_rk(k);
                if (kind == "c5") return gen_named(NamedFamily::C5);
                if (kind == "double_c6") return gen_named(NamedFamily::DoubleC6);
                if (kind == "cube") return gen_named(NamedFamily::Cube);
                if (kind == "touching") return gen_random(RandomKind::Touching, n, seed);
                if (kind == "lower") return gen_random(RandomKind::Lower, n, seed);
                if (kind == "intersecting")
                    return gen_random(RandomKind::Intersecting, n, seed);
                throw std::runtime_error("unknown kind " + kind);
            }();
            emit(out_path, family_to_json(f));
        } else if (cls->parsed()) {
            Family f = family_from_json(slurp(in_path));
            json labels = json::array();
            for (ClassLabel c : classify(f)) labels.push_back(to_string(c));
            emit("-", json{{"classes", labels}}.dump());
        } else if (swmis->parsed()) {
            Family f = family_from_json(slurp(in_path));
            WmisResult r = wmis_lower_intersecting(f);
            json chosen = json::array();
            for (int i : r.chosen) chosen.push_back(f[i].id);
            emit("-", json{{"weight", r.weight},
                           {"chosen", chosen},
                           {"work", r.stats.work()}}
                          .dump());
        } else if (awmis->parsed()) {
            Family f = family_from_json(slurp(in_path));
            WmisResult r = wmis_2approx(f);
            json chosen = json::array();
            for (int i : r.chosen) chosen.push_back(f[i].id);
            emit("-", json{{"weight", r.weight}, {"chosen", chosen}}.dump());
        } else if (sexact->parsed()) {
            Family f = family_from_json(slurp(in_path));
            if (what == "mis" || what == "wmis") {
                IntersectionGraph g = intersection_graph(f);
                std::vector<Weight> w(f.size(), 1);
                if (what == "wmis")
                    for (std::size_t i = 0; i < f.size(); ++i) w[i] = f[i].w;
                MisResult r = wmis_exact(g, w, budget_opt());
                json chosen = json::array();
                for (int i : r.vertices) chosen.push_back(f[i].id);
                emit("-", json{{"value", r.value},
                               {"chosen", chosen},
                               {"nodes", r.stats.nodes_explored}}
                              .dump());
            } else if (what == "mhs") {
                MhsResult r = mhs_exact(f, budget_opt());
                emit("-", json{{"size", r.size},
                               {"points", points_json(r.points)},
                               {"nodes", r.stats.nodes_explored}}
                              .dump());
            } else {
                throw std::runtime_error("unknown --what " + what);
            }
        } else if (amhs->parsed()) {
            Family f = family_from_json(slurp(in_path));
            HitSet h = approx_mhs(f);
            emit("-", json{{"size", h.points.size()},
                           {"points", points_json(h.points)},
                           {"provenance", h.provenance}}
                          .dump());
        } else if (gap->parsed()) {
            std::vector<std::string> files;
            if (gap_inputs.empty()) files.push_back("-");
            for (const std::string& arg : gap_inputs) {
                if (fs::is_directory(arg)) {
                    for (const auto& e : fs::directory_iterator(arg))
                        if (e.path().extension() == ".json") files.push_back(e.path().string());
                } else {
                    files.push_back(arg);
                }
            }
            std::sort(files.begin(), files.end());
            std::vector<GapRow> rows(files.size());
            std::atomic<std::size_t> next{0};
            unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                        : std::max(1u, std::thread::hardware_concurrency());
            workers = std::min<unsigned>(workers, std::max<std::size_t>(files.size(), 1));
            std::vector<std::thread> pool;
            std::mutex fail_mutex;
            std::string failure;
            for (unsigned t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
                        try {
                            Family f = family_from_json(slurp(files[i]));
                            rows[i] = {fs::path(files[i]).filename().string(), f.size(),
                                       gap_report(f, budget_opt())};
                        } catch (const std::exception& e) {
                            std::lock_guard<std::mutex> lock(fail_mutex);
                            if (failure.empty()) failure = files[i] + ": " + e.what();
                        }
                    }
                });
            for (auto& th : pool) th.join();
            if (!failure.empty()) throw std::runtime_error(failure);
            std::ostringstream csv;
            csv << "instance,n,mis_lb,mis_ub,mhs_lb,mhs_ub,ratio_lb\n";
            for (const GapRow& r : rows) csv << gap_csv_row(r) << '\n';
            emit(out_path, csv.str());
        } else if (rsat->parsed()) {
            CombLayout layout = layout_from_json(slurp(in_path));
            ReducedInstance inst = reduce(layout);
            emit(out_path, family_to_json(inst.family));
            if (!roles_path.empty()) emit(roles_path, roles_to_json(inst));
        } else if (chk->parsed()) {
            IntersectionGraph g = graph_from_json(slurp(in_path));
            VertexOrder o;
            if (order_arg.empty()) {
                o.perm.resize(g.n);
                for (int i = 0; i < g.n; ++i) o.perm[i] = i;
            } else {
                o.perm = order_arg;
            }
            auto bad = check_crossing_condition(g, o);
            if (bad)
                emit("-", json{{"ok", false}, {"violation", *bad}}.dump());
            else
                emit("-", json{{"ok", true}}.dump());
        } else if (find->parsed()) {
            IntersectionGraph g = graph_from_json(slurp(in_path));
            OrderSearchResult r = find_touching_order(g, budget_opt());
            if (r.order)
                emit("-", json{{"found", true}, {"order", r.order->perm}, {"nodes", r.nodes}}
                              .dump());
            else
                emit("-", json{{"found", false}, {"nodes", r.nodes}}.dump());
        } else if (grid->parsed()) {
            Family f = family_from_json(slurp(in_path));
            GridifyResult g = gridify(f);
            json rects = json::array();
            for (const Rect& r : g.rects)
                rects.push_back({{"id", r.id},
                                 {"lx", r.l.x},
                                 {"ly", r.l.y},
                                 {"ux", r.u.x},
                                 {"uy", r.u.y},
                                 {"w", r.w}});
            emit(out_path, json{{"alpha", g.alpha}, {"rects", rects}}.dump());
        } else if (rnd->parsed()) {
            Family f = family_from_json(slurp(in_path));
            RenderOptions opt;
            opt.staircases = overlays;
            emit(out_path, render_svg(f, opt));
        }
    } catch (const BudgetExceeded& e) {
        if (json_errors)
            std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump() << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        if (json_errors)
            std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
