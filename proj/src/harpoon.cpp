#include "rectdiag/harpoon.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace rectdiag {

namespace {

// Augmented instance: ids 0..n+1, with dummy diagonal-touching unit squares
// past both ends. Their harpoon H_{0,n+1} must contain every rect, so they
// sit beyond max(|coordinate|), not merely beyond the coordinate range.
struct Instance {
    std::vector<Rect> rect;  // size n+2
    std::vector<Coord> ax, bx, lx, ly;
    int n = 0;

    explicit Instance(const Family& f) {
        n = static_cast<int>(f.size());
        Coord m = 2;
        for (const Rect& r : f.rects())
            m = std::max({m, std::abs(r.l.x), std::abs(r.l.y), std::abs(r.u.x),
                          std::abs(r.u.y)});
        Rect left{-1, {-m - 3, m + 1}, {-m - 2, m + 2}, 0};
        Rect right{-2, {m + 1, -m - 3}, {m + 2, -m - 2}, 0};
        rect.reserve(n + 2);
        rect.push_back(left);
        for (const Rect& r : f.rects()) rect.push_back(r);
        rect.push_back(right);
        ax.resize(n + 2);
        bx.resize(n + 2);
        lx.resize(n + 2);
        ly.resize(n + 2);
        for (int i = 0; i < n + 2; ++i) {
            ax[i] = Family::anchor_a_x(rect[i]);
            bx[i] = Family::anchor_b_x(rect[i]);
            lx[i] = rect[i].l.x;
            ly[i] = rect[i].l.y;
        }
    }

    // True iff the below-D region of rect k lies inside harpoon H_{i,j}.
    // The region's bounding box is [l.x, b_x] x [l.y, -a_x]; the harpoon is
    // the below-D part of the box spanned by its two defining points minus
    // the first rect.
    bool in_harpoon(int k, int i, int j) const {
        if (k == i || k == j) return false;
        Coord px, py, qx, qy;  // defining points of the box
        if (i < j) {  // horizontal: (l^i_x, a^i_y) and a^j
            px = lx[i];
            py = -ax[i];
            qx = ax[j];
            qy = -ax[j];
        } else {  // vertical: (b^i_x, l^i_y) and b^j
            px = bx[i];
            py = ly[i];
            qx = bx[j];
            qy = -bx[j];
        }
        const Coord box_lx = std::min(px, qx), box_ux = std::max(px, qx);
        const Coord box_ly = std::min(py, qy), box_uy = std::max(py, qy);
        if (lx[k] < box_lx || bx[k] > box_ux) return false;
        if (ly[k] < box_ly || -ax[k] > box_uy) return false;
        return !intersect_below_diagonal(rect[k], rect[i]);
    }
};

constexpr Weight kUnknown = -1;
constexpr Weight kPending = -2;

// Dynamic program over hug pairs (q, t): V(q, t) is the best independent set
// of rects whose diagonal chords lie strictly between the chords of q and t
// and that avoid both q and t. Splitting an optimal set at an element m that
// is minimal in the onion order gives
//     V(q, t) = max(0, max_m V(q, m) + w_m + V(m, t)),
// and candidates m dominated by q or by t can be skipped: a minimal element
// of a set avoiding q and t is never dominated by them through the chords.
// Two facts make the composition sound for *every* candidate m (not just
// minimal ones): a rect disjoint from m with its chord left of m's has no
// points right of l^m and below l^m (walking up then right to its chord
// would cross m), and the 180-degree rotation of this for chords right of m.
// Together they force any collision between the left and right parts, or
// with the opposite boundary rect, into the body of m itself.
class HarpoonDp {
public:
    explicit HarpoonDp(const Family& f) : inst_(f), n_(inst_.n) {
        const int m = n_ + 2;
        val_.assign(static_cast<std::size_t>(m) * m, kUnknown);
        pick_.assign(static_cast<std::size_t>(m) * m, -1);
    }

    WmisResult run() {
        Weight total = eval(0, n_ + 1);
        WmisResult res;
        res.weight = total;
        reconstruct(0, n_ + 1, res.chosen);
        for (int& id : res.chosen) --id;  // back to family indices
        std::sort(res.chosen.begin(), res.chosen.end());
        res.stats = stats_;
        return res;
    }

private:
    struct Frame {
        int q, t;
        int phase = 0;
        std::vector<int> members;
    };

    Weight& cell(int q, int t) { return val_[static_cast<std::size_t>(q) * (n_ + 2) + t]; }
    int& pick(int q, int t) { return pick_[static_cast<std::size_t>(q) * (n_ + 2) + t]; }

    bool dominated(int m, int b) const {  // m strictly inside b's onion shadow
        return !intersect_below_diagonal(inst_.rect[m], inst_.rect[b]) &&
               inst_.lx[m] < inst_.lx[b] && inst_.ly[m] < inst_.ly[b];
    }

    bool member(int m, int q, int t) const {
        if (m == q || m == t) return false;
        if (inst_.ax[m] <= inst_.bx[q] || inst_.bx[m] >= inst_.ax[t]) return false;
        const Rect& rm = inst_.rect[m];
        if (intersect_below_diagonal(rm, inst_.rect[q])) return false;
        if (intersect_below_diagonal(rm, inst_.rect[t])) return false;
        return !dominated(m, q) && !dominated(m, t);
    }

    Weight eval(int q0, int t0) {
        std::vector<Frame> stack;
        stack.push_back({q0, t0, 0, {}});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            Weight& me = cell(fr.q, fr.t);
            if (me >= 0) {
                stack.pop_back();
                continue;
            }
            if (fr.phase == 0) {
                fr.phase = 1;
                me = kPending;
                const int q = fr.q, t = fr.t;
                std::vector<int> members;
                for (int m = q + 1; m < t; ++m) {  // chords are a-sorted
                    ++stats_.candidate_iterations;
                    if (member(m, q, t)) members.push_back(m);
                }
                fr.members = members;  // fr may dangle after pushes; copy first
                for (int m : members) {
                    if (cell(q, m) == kUnknown) stack.push_back({q, m, 0, {}});
                    if (cell(m, t) == kUnknown) stack.push_back({m, t, 0, {}});
                }
                continue;
            }
            ++stats_.cells;
            Weight best = 0;
            int best_m = -1;
            for (int m : fr.members) {
                Weight v = cell(fr.q, m) + inst_.rect[m].w + cell(m, fr.t);
                if (v > best) {
                    best = v;
                    best_m = m;
                }
            }
            me = best;
            pick(fr.q, fr.t) = best_m;
            stack.pop_back();
        }
        return cell(q0, t0);
    }

    void reconstruct(int q, int t, std::vector<int>& out) {
        std::vector<std::pair<int, int>> todo{{q, t}};
        while (!todo.empty()) {
            auto [cq, ct] = todo.back();
            todo.pop_back();
            if (cell(cq, ct) <= 0) continue;
            int m = pick(cq, ct);
            if (m < 0) continue;
            out.push_back(m);
            todo.push_back({cq, m});
            todo.push_back({m, ct});
        }
    }

    Instance inst_;
    int n_;
    std::vector<Weight> val_;
    std::vector<int> pick_;
    DpStats stats_;
};

// A rect whose only below-D point is its lower-left corner degenerates the
// strip bookkeeping, so the solver swaps it for a small square touching D at
// that corner. After scaling everything by 4 the square meets exactly the
// rects that contain the corner, so the intersection graph is unchanged.
Family dp_normalize(const Family& f, bool* scaled) {
    *scaled = std::any_of(f.rects().begin(), f.rects().end(),
                          [](const Rect& r) { return on_diagonal(r.l); });
    if (!*scaled) return f;
    std::vector<Rect> out;
    out.reserve(f.size());
    for (const Rect& r : f.rects()) {
        Rect t = r;
        if (on_diagonal(r.l)) {
            t.l = {4 * r.l.x - 1, 4 * r.l.y - 1};
            t.u = {4 * r.l.x, 4 * r.l.y};
        } else {
            t.l = {4 * r.l.x, 4 * r.l.y};
            t.u = {4 * r.u.x, 4 * r.u.y};
        }
        out.push_back(t);
    }
    return validate_family(std::move(out));
}

}  // namespace

bool rect_in_harpoon(const Family& f, int k, int i, int j) {
    Instance inst(f);
    if (k < 0 || k > inst.n + 1 || i < 0 || i > inst.n + 1 || j < 0 || j > inst.n + 1 || i == j)
        throw std::out_of_range("rect_in_harpoon: bad id");
    return inst.in_harpoon(k, i, j);
}

std::pair<Rect, Rect> dp_dummies(const Family& f) {
    Instance inst(f);
    return {inst.rect.front(), inst.rect.back()};
}

bool onion_dominates(const Family& f, int i, int j) {
    const Rect& a = f[static_cast<std::size_t>(i)];
    const Rect& b = f[static_cast<std::size_t>(j)];
    if (i == j || rects_intersect(a, b)) return false;
    return a.l.x < b.l.x && a.l.y < b.l.y;
}

WmisResult wmis_lower_intersecting(const Family& f) {
    if (!classify(f).count(ClassLabel::LowerIntersecting)) throw NotLowerIntersecting();
    if (f.size() == 0) return {};
    bool scaled = false;
    Family work = dp_normalize(f, &scaled);
    HarpoonDp dp(work);
    WmisResult res = dp.run();
    // dp_normalize keeps the anchor order, so indices carry over unchanged.
    Weight check = 0;
    for (std::size_t a = 0; a < res.chosen.size(); ++a) {
        check += f[res.chosen[a]].w;
        for (std::size_t b = a + 1; b < res.chosen.size(); ++b)
            if (rects_intersect(f[res.chosen[a]], f[res.chosen[b]]))
                throw std::logic_error("harpoon DP produced an intersecting witness");
    }
    if (check != res.weight)
        throw std::logic_error("harpoon DP witness weight mismatch");
    return res;
}

WmisResult wmis_2approx(const Family& f) {
    std::vector<Rect> upper, left;
    std::vector<int> upper_idx, left_idx;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rect& r = f[i];
        if (-r.u.y >= r.l.x) {  // diagonal crosses the upper side
            upper.push_back(r);
            upper_idx.push_back(static_cast<int>(i));
        } else {  // then it crosses the left side; reflect to reduce
            left.push_back(reflect(r));
            left_idx.push_back(static_cast<int>(i));
        }
    }
    WmisResult a, b;
    if (!upper.empty()) {
        a = wmis_lower_intersecting(validate_family(upper));
        for (int& c : a.chosen) c = upper_idx[c];
    }
    if (!left.empty()) {
        b = wmis_lower_intersecting(validate_family(left));
        for (int& c : b.chosen) c = left_idx[c];
    }
    WmisResult best = (!left.empty() && (upper.empty() || b.weight > a.weight)) ? b : a;
    best.stats.cells = a.stats.cells + b.stats.cells;
    best.stats.candidate_iterations = a.stats.candidate_iterations + b.stats.candidate_iterations;
    std::sort(best.chosen.begin(), best.chosen.end());
    return best;
}

}  // namespace rectdiag
