#include "rectdiag/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rectdiag/orderings.hpp"

namespace rectdiag {

namespace {

// Which of the four coordinate slots of a rect a value came from, tracked in
// the negated-y space so x and y can be de-conflicted together.
enum SlotKind { kLx, kNegUy, kTiedL, kTiedU, kUx, kNegLy };

struct Slot {
    Coord value;
    int rect;
    SlotKind kind;
};

int kind_rank(SlotKind k) { return static_cast<int>(k); }

}  // namespace

Family ensure_general_position(const std::vector<Rect>& rects) {
    const Coord n = std::max<Coord>(4, static_cast<Coord>(rects.size()));
    const Coord scale = 4 * n;

    std::vector<Slot> slots;
    slots.reserve(rects.size() * 4);
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const Rect& r = rects[i];
        const int id = static_cast<int>(i);
        if (on_diagonal(r.l))
            slots.push_back({r.l.x, id, kTiedL});
        else {
            slots.push_back({r.l.x, id, kLx});
            slots.push_back({-r.l.y, id, kNegLy});
        }
        if (on_diagonal(r.u))
            slots.push_back({r.u.x, id, kTiedU});
        else {
            slots.push_back({r.u.x, id, kUx});
            slots.push_back({-r.u.y, id, kNegUy});
        }
    }
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        if (a.value != b.value) return a.value < b.value;
        if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) < kind_rank(b.kind);
        return a.rect < b.rect;
    });

    // Within a group of equal values every slot gets a distinct offset; the
    // kind order keeps closed touches touching (l before u in x, the same in
    // negated-y space reads -u before -l) and keeps on-diagonal corners on D.
    std::map<std::pair<int, int>, Coord> new_x;     // (rect, 0:l 1:u) -> x
    std::map<std::pair<int, int>, Coord> new_negy;  // (rect, 0:l 1:u) -> -y
    for (std::size_t g = 0; g < slots.size();) {
        std::size_t h = g;
        while (h < slots.size() && slots[h].value == slots[g].value) ++h;
        for (std::size_t t = g; t < h; ++t) {
            const Slot& s = slots[t];
            const Coord v = s.value * scale + static_cast<Coord>(t - g);
            switch (s.kind) {
                case kLx: new_x[{s.rect, 0}] = v; break;
                case kUx: new_x[{s.rect, 1}] = v; break;
                case kNegLy: new_negy[{s.rect, 0}] = v; break;
                case kNegUy: new_negy[{s.rect, 1}] = v; break;
                case kTiedL:
                    new_x[{s.rect, 0}] = v;
                    new_negy[{s.rect, 0}] = v;
                    break;
                case kTiedU:
                    new_x[{s.rect, 1}] = v;
                    new_negy[{s.rect, 1}] = v;
                    break;
            }
        }
        g = h;
    }

    std::vector<Rect> out;
    out.reserve(rects.size());
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const int id = static_cast<int>(i);
        Rect t = rects[i];
        t.l = {new_x.at({id, 0}), -new_negy.at({id, 0})};
        t.u = {new_x.at({id, 1}), -new_negy.at({id, 1})};
        out.push_back(t);
    }
    if (!(intersection_graph(out) == intersection_graph(rects)))
        throw std::logic_error("ensure_general_position changed the intersection graph");
    return validate_family(std::move(out));
}

Family gen_rk(int k) {
    if (k < 1) throw std::invalid_argument("gen_rk: k must be >= 1");
    // Layer coordinates from the construction, scaled by 3 so the thirds are
    // integers; half-infinite sides clipped by a box that strictly contains
    // all finite coordinates.
    const Coord hi = 3 * (2 * static_cast<Coord>(k) + 4);
    std::vector<Rect> rects;
    int id = 0;
    for (Coord i = 1; i <= k; ++i) {
        const Coord base = 6 * i;
        rects.push_back({id++, {base, -base - 1}, {base + 3, 3}, 1});            // U(i)
        rects.push_back({id++, {base + 2, -hi}, {base + 5, -base}, 1});          // D(i)
        rects.push_back({id++, {-3, -base - 3}, {base + 1, -base}, 1});          // L(i)
        rects.push_back({id++, {base, -base - 5}, {hi, -base - 2}, 1});          // R(i)
    }
    return ensure_general_position(rects);
}

IntersectionGraph double_c6_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i)
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t) edges.push_back({2 * i + s, 2 * ((i + 1) % 6) + t});
    return make_graph(12, edges);
}

IntersectionGraph cube_graph() {
    // Q3 = C4 x K2: outer cycle 0..3, inner cycle 4..7, spokes i ~ i+4.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i) {
        edges.push_back({i, (i + 1) % 4});
        edges.push_back({4 + i, 4 + (i + 1) % 4});
        edges.push_back({i, 4 + i});
    }
    return make_graph(8, edges);
}

namespace {

Family cube_family() {
    // Outer cycle below D, inner cycle above (the mirror image shifted one
    // unit along D); chords overlap exactly at the spokes. See the class
    // separation result: the pattern is intersecting but not
    // lower-intersecting.
    std::vector<Rect> rects;
    auto outer = [&](int k) -> Rect {
        const Coord p = 20 * k;
        Rect r;
        r.id = k;
        r.u = {p + 11, -p};
        r.l.x = k == 0 ? -1 : 20 * (k - 1) + 5;
        r.l.y = k == 3 ? -p - 21 : -(20 * (k + 1)) - 1;
        return r;
    };
    // outer 3 must reach outer 0: stretch its bottom, and outer 0 reaches
    // down to it (cycle closure handled explicitly below).
    Rect o0 = outer(0), o1 = outer(1), o2 = outer(2), o3 = outer(3);
    o0.l.y = -61;  // down to o3's band
    o3.l.x = 9;    // left under o0's column
    o3.l.y = -81;
    rects = {o0, o1, o2, o3};
    for (int k = 0; k < 4; ++k) {
        Rect m = reflect(rects[k]);  // mirror across D, then shift +1 along D
        m.id = 4 + k;
        m.l.x += 1;
        m.u.x += 1;
        m.l.y -= 1;
        m.u.y -= 1;
        rects.push_back(m);
    }
    return ensure_general_position(rects);
}

}  // namespace

Family gen_named(NamedFamily kind) {
    switch (kind) {
        case NamedFamily::C5: {
            IntersectionGraph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
            VertexOrder natural{{0, 1, 2, 3, 4}};
            return order_to_representation(c5, natural);
        }
        case NamedFamily::DoubleC6: {
            IntersectionGraph g = double_c6_graph();
            OrderSearchResult r = find_touching_order(g);
            if (!r.order) throw std::logic_error("doubled 6-cycle lost its touching order");
            return order_to_representation(g, *r.order);
        }
        case NamedFamily::Cube: return cube_family();
    }
    throw std::invalid_argument("gen_named: unknown kind");
}

namespace {

Family try_random(RandomKind kind, int n, SplitMix64& rng) {
    const Coord span = 16 * static_cast<Coord>(n) + 32;
    std::vector<Rect> rects;
    rects.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Coord c = rng.range(0, span);  // diagonal position
        const Coord w = rng.range(1, 12), h = rng.range(1, 12);
        Rect r;
        r.id = i;
        r.w = rng.range(1, 100);
        switch (kind) {
            case RandomKind::Touching:
                r.u = {c, -c};
                r.l = {c - w, -c - h};
                break;
            case RandomKind::Lower: {
                // diagonal crosses the upper side at (c, -c)
                const Coord lx = c - rng.range(1, 12);
                const Coord ux = c + rng.range(1, 12);
                r.u = {ux, -c};
                r.l = {lx, -c - h};
                break;
            }
            case RandomKind::Intersecting: {
                // rect contains the diagonal point (c, -c)
                r.l = {c - rng.range(0, 12), -c - rng.range(0, 12)};
                r.u = {r.l.x + rng.range(1, 24), r.l.y + rng.range(1, 24)};
                if (r.u.x < c) r.u.x = c + 1;
                if (r.u.y < -c) r.u.y = -c + 1;
                break;
            }
        }
        rects.push_back(r);
    }
    return ensure_general_position(rects);
}

}  // namespace

Family gen_random(RandomKind kind, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345 + static_cast<int>(kind));
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            Family f = try_random(kind, n, rng);
            auto cls = classify(f);
            if (kind == RandomKind::Touching && !cls.count(ClassLabel::Touching)) continue;
            if (kind == RandomKind::Lower && !cls.count(ClassLabel::LowerIntersecting)) continue;
            return f;
        } catch (const std::logic_error&) {
            // de-duplication rejected the draw; try again deterministically
        } catch (const FamilyError&) {
        }
    }
    throw std::runtime_error("gen_random: could not generate a valid family");
}

}  // namespace rectdiag
