#include "rectdiag/orderings.hpp"

#include <algorithm>

#include "rectdiag/exact.hpp"
#include "rectdiag/generators.hpp"

namespace rectdiag {

std::optional<std::array<int, 4>> check_crossing_condition(const IntersectionGraph& g,
                                                           const VertexOrder& o) {
    const int n = g.n;
    const auto& p = o.perm;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (!g.adj(p[a], p[c]) || g.adj(p[b], p[c])) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.adj(p[b], p[d]))
                        return std::array<int, 4>{p[a], p[b], p[c], p[d]};
            }
    return std::nullopt;
}

namespace {

class OrderSearch {
public:
    OrderSearch(const IntersectionGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    OrderSearchResult run() {
        prefix_.clear();
        used_.assign(g_.n, 0);
        OrderSearchResult res;
        if (extend()) res.order = VertexOrder{prefix_};
        res.nodes = nodes_;
        return res;
    }

private:
    // Appending v as the new last position only creates quadruples whose d=v;
    // the condition over earlier positions was checked when they were placed.
    bool violates(int v) const {
        const int m = static_cast<int>(prefix_.size());
        for (int b = 0; b < m; ++b) {
            if (!g_.adj(prefix_[b], v)) continue;
            for (int c = b + 1; c < m; ++c) {
                if (g_.adj(prefix_[b], prefix_[c])) continue;
                for (int a = 0; a < b; ++a)
                    if (g_.adj(prefix_[a], prefix_[c])) return true;
            }
        }
        return false;
    }

    bool extend() {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
        if (static_cast<int>(prefix_.size()) == g_.n) return true;
        for (int v = 0; v < g_.n; ++v) {
            if (used_[v] || violates(v)) continue;
            used_[v] = 1;
            prefix_.push_back(v);
            if (extend()) return true;
            prefix_.pop_back();
            used_[v] = 0;
        }
        return false;
    }

    const IntersectionGraph& g_;
    std::uint64_t budget_;
    std::vector<int> prefix_;
    std::vector<char> used_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

OrderSearchResult find_touching_order(const IntersectionGraph& g,
                                      std::optional<std::uint64_t> budget) {
    OrderSearch search(g, budget.value_or(default_node_budget()));
    return search.run();
}

Family order_to_representation(const IntersectionGraph& g, const VertexOrder& o) {
    if (check_crossing_condition(g, o)) throw InvalidOrder();
    const int n = g.n;
    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t) pos[o.perm[t]] = t;

    std::vector<Rect> rects;
    rects.reserve(n);
    for (int t = 0; t < n; ++t) {
        const int v = o.perm[t];
        // corner on D; reach left to the earliest neighbor, down to the latest
        const Coord ux = 3 * static_cast<Coord>(t + 1);
        int first = t, last = t;
        for (int u = 0; u < n; ++u)
            if (g.adj(v, u)) {
                first = std::min(first, pos[u]);
                last = std::max(last, pos[u]);
            }
        Rect r;
        r.id = v;
        r.u = {ux, -ux};
        r.l.x = first < t ? 3 * static_cast<Coord>(first + 1) : ux - 1;
        r.l.y = last > t ? -3 * static_cast<Coord>(last + 1) : -ux - 1;
        rects.push_back(r);
    }
    Family f = ensure_general_position(rects);
    IntersectionGraph back = intersection_graph(f);
    // realized graph must match up to the id relabeling
    std::vector<int> idx_of(n);
    for (std::size_t i = 0; i < f.size(); ++i) idx_of[f[i].id] = static_cast<int>(i);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (back.adj(idx_of[u], idx_of[v]) != g.adj(u, v))
                throw std::logic_error("order_to_representation: realized graph mismatch");
    return f;
}

}  // namespace rectdiag
