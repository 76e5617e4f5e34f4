#include "rectdiag/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "rectdiag/staircase.hpp"

namespace rectdiag {

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("RECTDIAG_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ULL;
}

namespace {

// Exact maximum weight independent set. Works on explicit vertex sets:
// degree reductions first (isolated vertices, dominated pendant neighbors),
// then connected components are solved independently; a component that is a
// path or cycle is closed-form, anything else branches on a max-degree
// vertex. Large sparse gadget instances fall apart quickly under this.
class WmisSolver {
public:
    WmisSolver(const IntersectionGraph& g, const std::vector<Weight>& w, std::uint64_t budget)
        : w_(w), budget_(budget), n_(g.n) {
        adj_.resize(n_);
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < n_; ++u)
                if (g.adj(v, u)) adj_[v].push_back(u);
        in_.assign(n_, 0);
        deg_.assign(n_, 0);
    }

    MisResult solve() {
        std::vector<int> all(n_);
        std::iota(all.begin(), all.end(), 0);
        auto [value, set] = solve_set(std::move(all));
        MisResult res;
        res.value = value;
        res.vertices = std::move(set);
        std::sort(res.vertices.begin(), res.vertices.end());
        res.stats.nodes_explored = nodes_;
        return res;
    }

private:
    using Sol = std::pair<Weight, std::vector<int>>;

    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
    }

    Sol solve_set(std::vector<int> verts) {
        tick();
        Sol out{0, {}};
        for (int v : verts) in_[v] = 1;
        for (int v : verts) {
            int d = 0;
            for (int u : adj_[v]) d += in_[u];
            deg_[v] = d;
        }
        // reductions: repeatedly take isolated vertices and pendants that
        // weigh at least their only neighbor
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : verts) {
                if (!in_[v]) continue;
                if (deg_[v] == 0) {
                    out.first += w_[v];
                    out.second.push_back(v);
                    in_[v] = 0;
                    changed = true;
                } else if (deg_[v] == 1) {
                    int u = -1;
                    for (int x : adj_[v])
                        if (in_[x]) u = x;
                    if (w_[v] >= w_[u]) {
                        out.first += w_[v];
                        out.second.push_back(v);
                        drop(v);
                        drop(u);
                        changed = true;
                    }
                }
            }
        }
        // split into components
        std::vector<std::vector<int>> comps;
        {
            std::vector<char> seen(verts.size(), 0);
            std::map<int, std::size_t> pos;
            for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
            for (int s : verts) {
                if (!in_[s] || seen[pos[s]]) continue;
                std::vector<int> comp{s};
                seen[pos[s]] = 1;
                for (std::size_t head = 0; head < comp.size(); ++head)
                    for (int u : adj_[comp[head]])
                        if (in_[u] && !seen[pos[u]]) {
                            seen[pos[u]] = 1;
                            comp.push_back(u);
                        }
                comps.push_back(std::move(comp));
            }
        }
        // leave the shared marks clean before recursing into components
        for (int v : verts)
            if (in_[v]) in_[v] = 0;

        for (auto& comp : comps) {
            Sol sub = solve_component(comp);
            out.first += sub.first;
            out.second.insert(out.second.end(), sub.second.begin(), sub.second.end());
        }
        return out;
    }

    void drop(int v) {
        in_[v] = 0;
        for (int u : adj_[v])
            if (in_[u]) --deg_[u];
    }

    Sol solve_component(std::vector<int>& comp) {
        // local degrees
        for (int v : comp) in_[v] = 1;
        int branch = -1, maxdeg = 0;
        for (int v : comp) {
            int d = 0;
            for (int u : adj_[v]) d += in_[u];
            deg_[v] = d;
            if (d > maxdeg) {
                maxdeg = d;
                branch = v;
            }
        }
        if (maxdeg <= 2) {
            Sol out = chain_solve(comp);
            for (int v : comp) in_[v] = 0;
            return out;
        }
        for (int v : comp) in_[v] = 0;

        // exclude branch
        std::vector<int> rest;
        rest.reserve(comp.size() - 1);
        for (int v : comp)
            if (v != branch) rest.push_back(v);
        Sol ex = solve_set(std::move(rest));
        // include branch
        std::vector<int> rest2;
        rest2.reserve(comp.size());
        for (int u : adj_[branch]) in_[u] = 2;  // temp mark of the closed nbhd
        for (int v : comp)
            if (v != branch && in_[v] != 2) rest2.push_back(v);
        for (int u : adj_[branch]) in_[u] = 0;
        Sol inc = solve_set(std::move(rest2));
        inc.first += w_[branch];
        inc.second.push_back(branch);
        return inc.first > ex.first ? inc : ex;
    }

    // comp has max degree 2: a path or a cycle
    Sol chain_solve(const std::vector<int>& comp) {
        int endpoint = comp[0];
        int degsum = 0;
        for (int v : comp) {
            degsum += deg_[v];
            if (deg_[v] <= 1) endpoint = v;
        }
        bool cycle = degsum == static_cast<int>(2 * comp.size());
        std::vector<int> chain;
        chain.reserve(comp.size());
        int prev = -1, cur = endpoint;
        while (chain.size() < comp.size()) {
            chain.push_back(cur);
            in_[cur] = 2;  // visited
            int next = -1;
            for (int u : adj_[cur])
                if (in_[u] == 1 && u != prev) {
                    next = u;
                    break;
                }
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        if (chain.size() != comp.size())
            throw std::logic_error("chain walk failed on a degree-2 component");
        for (int v : comp) in_[v] = 1;
        Sol out{0, {}};
        out.first = chain_value(chain, cycle, &out.second);
        return out;
    }

    Weight path_dp(const std::vector<int>& chain, std::size_t lo, std::size_t hi,
                   std::vector<int>* sel) {
        if (lo > hi || hi >= chain.size()) return 0;
        const std::size_t len = hi - lo + 1;
        std::vector<Weight> dp(len + 1, 0);
        for (std::size_t k = 0; k < len; ++k) {
            Weight with = (k >= 1 ? dp[k - 1] : 0) + w_[chain[lo + k]];
            dp[k + 1] = std::max(dp[k], with);
        }
        if (sel) {
            std::size_t k = len;
            while (k > 0) {
                if (dp[k] == dp[k - 1]) {
                    --k;
                } else {
                    sel->push_back(chain[lo + k - 1]);
                    k = (k >= 2) ? k - 2 : 0;
                }
            }
        }
        return dp[len];
    }

    Weight chain_value(const std::vector<int>& chain, bool cycle, std::vector<int>* pick) {
        const std::size_t m = chain.size();
        if (m == 0) return 0;
        if (!cycle || m <= 2) return path_dp(chain, 0, m - 1, pick);
        std::vector<int> sel_a, sel_b;
        Weight a = path_dp(chain, 1, m - 1, pick ? &sel_a : nullptr);
        Weight b = w_[chain[0]] + path_dp(chain, 2, m - 2, pick ? &sel_b : nullptr);
        if (pick) {
            if (b > a) {
                pick->push_back(chain[0]);
                pick->insert(pick->end(), sel_b.begin(), sel_b.end());
            } else {
                pick->insert(pick->end(), sel_a.begin(), sel_a.end());
            }
        }
        return std::max(a, b);
    }

    const std::vector<Weight>& w_;
    std::uint64_t budget_;
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> in_;
    std::vector<int> deg_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

MisResult wmis_exact(const IntersectionGraph& g, const std::vector<Weight>& weights,
                     std::optional<std::uint64_t> budget) {
    for (Weight w : weights)
        if (w < 0) throw std::invalid_argument("wmis_exact: negative weight");
    WmisSolver solver(g, weights, budget.value_or(default_node_budget()));
    return solver.solve();
}

MisResult mis_exact(const IntersectionGraph& g, std::optional<std::uint64_t> budget) {
    std::vector<Weight> unit(g.n, 1);
    return wmis_exact(g, unit, budget);
}

std::vector<Point> mhs_candidate_points(const Family& f) {
    std::vector<Coord> xs, ys;
    for (const Rect& r : f.rects()) {
        xs.push_back(r.u.x);
        ys.push_back(r.u.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<Point> pts;
    pts.reserve(xs.size() * ys.size());
    for (Coord x : xs)
        for (Coord y : ys) pts.push_back({x, y});
    return pts;
}

namespace {

// Exact minimum cover of rects by candidate points, branching on the rect
// with the fewest usable candidates.
class MhsSolver {
public:
    MhsSolver(const Family& f, std::uint64_t budget) : f_(f), budget_(budget) {
        pts_ = mhs_candidate_points(f);
        covers_.resize(pts_.size());
        covered_by_.resize(f.size());
        for (std::size_t p = 0; p < pts_.size(); ++p)
            for (std::size_t r = 0; r < f.size(); ++r)
                if (f[r].contains(pts_[p])) {
                    covers_[p].push_back(static_cast<int>(r));
                    covered_by_[r].push_back(static_cast<int>(p));
                }
    }

    MhsResult solve() {
        hit_count_.assign(f_.size(), 0);
        best_.reset();
        chosen_.clear();
        recurse();
        MhsResult res;
        res.points.reserve(best_->size());
        for (int p : *best_) res.points.push_back(pts_[p]);
        res.size = res.points.size();
        res.stats.nodes_explored = nodes_;
        return res;
    }

private:
    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
    }

    // Greedy packing of pairwise-disjoint uncovered rects: each needs its own
    // point, so the pack size lower-bounds the remaining cover.
    std::size_t disjoint_lower_bound() {
        std::size_t lb = 0;
        std::vector<int> packed;
        for (std::size_t r = 0; r < f_.size(); ++r) {
            if (hit_count_[r] > 0) continue;
            bool ok = true;
            for (int q : packed)
                if (rects_intersect(f_[r], f_[q])) {
                    ok = false;
                    break;
                }
            if (ok) {
                packed.push_back(static_cast<int>(r));
                ++lb;
            }
        }
        return lb;
    }

    void recurse() {
        tick();
        if (best_ && chosen_.size() + disjoint_lower_bound() >= best_->size()) return;

        int target = -1;
        for (std::size_t r = 0; r < f_.size(); ++r) {
            if (hit_count_[r] > 0) continue;
            if (target == -1 || covered_by_[r].size() < covered_by_[target].size())
                target = static_cast<int>(r);
        }
        if (target == -1) {
            if (!best_ || chosen_.size() < best_->size()) best_ = chosen_;
            return;
        }
        for (int p : covered_by_[target]) {
            chosen_.push_back(p);
            for (int r : covers_[p]) ++hit_count_[r];
            recurse();
            for (int r : covers_[p]) --hit_count_[r];
            chosen_.pop_back();
        }
    }

    const Family& f_;
    std::uint64_t budget_;
    std::vector<Point> pts_;
    std::vector<std::vector<int>> covers_;      // point -> rects
    std::vector<std::vector<int>> covered_by_;  // rect -> points
    std::vector<int> hit_count_;
    std::vector<int> chosen_;
    std::optional<std::vector<int>> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

MhsResult mhs_exact(const Family& f, std::optional<std::uint64_t> budget) {
    if (f.size() == 0) return {};
    MhsSolver solver(f, budget.value_or(default_node_budget()));
    return solver.solve();
}

std::size_t max_point_coverage(const Family& f) {
    std::vector<Coord> xs, ys;
    for (const Rect& r : f.rects()) {
        xs.push_back(r.l.x);
        xs.push_back(r.u.x);
        ys.push_back(r.l.y);
        ys.push_back(r.u.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::size_t best = 0;
    for (Coord x : xs)
        for (Coord y : ys) {
            std::size_t c = 0;
            for (const Rect& r : f.rects())
                if (r.contains({x, y})) ++c;
            best = std::max(best, c);
        }
    return best;
}

GapReport gap_report(const Family& f, std::optional<std::uint64_t> budget) {
    GapReport rep;
    rep.n = f.size();
    if (f.size() == 0) return rep;

    IntersectionGraph g = intersection_graph(f);
    try {
        MisResult mis = mis_exact(g, budget);
        rep.mis_lb = rep.mis_ub = mis.value;
        rep.mis_exact_known = true;
    } catch (const BudgetExceeded&) {
        rep.mis_lb = 1;
        rep.mis_ub = static_cast<std::int64_t>(f.size());
    }

    HitSet approx = approx_mhs(f);
    std::size_t cov = max_point_coverage(f);
    std::int64_t mhs_lb =
        static_cast<std::int64_t>((f.size() + cov - 1) / cov);  // ceil(n / maxcov)
    try {
        MhsResult mhs = mhs_exact(f, budget);
        rep.mhs_lb = rep.mhs_ub = static_cast<std::int64_t>(mhs.size);
        rep.mhs_exact_known = true;
    } catch (const BudgetExceeded&) {
        rep.mhs_ub = static_cast<std::int64_t>(approx.points.size());
        rep.mhs_lb = std::max(mhs_lb, rep.mis_lb);  // mis <= mhs
    }
    if (!rep.mis_exact_known) rep.mis_ub = std::min(rep.mis_ub, rep.mhs_ub);
    rep.ratio_lb = static_cast<double>(rep.mhs_lb) / static_cast<double>(rep.mis_ub);
    return rep;
}

}  // namespace rectdiag
