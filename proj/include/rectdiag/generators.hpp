#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rectdiag/geometry.hpp"

// Deterministic instance generators: the paper's named families (R_k, the
// 5-cycle, the doubled 6-cycle, the cube) and seeded random families of each
// class, all emitted in general position.

namespace rectdiag {

// Order-preserving de-duplication: scales all coordinates, then spreads
// coordinates sharing a value so that every corner coordinate is distinct
// and no corner x equals a negated corner y across different corners.
// Corners lying exactly on D keep that property. Fails loudly if the
// intersection graph changes.
Family ensure_general_position(const std::vector<Rect>& rects);

// The duality-gap lower bound family: k layers of four rects each, clipped
// to a bounding box, coordinates scaled so thirds become integers.
Family gen_rk(int k);

enum class NamedFamily { C5, DoubleC6, Cube };
Family gen_named(NamedFamily kind);

// The doubled 6-cycle graph itself (12 vertices, twins nonadjacent).
IntersectionGraph double_c6_graph();
IntersectionGraph cube_graph();

enum class RandomKind { Touching, Lower, Intersecting };
Family gen_random(RandomKind kind, int n, std::uint64_t seed);

// Small deterministic PRNG so outputs are identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace rectdiag
