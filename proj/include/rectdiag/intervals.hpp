#pragma once

#include <cstdint>
#include <vector>

// Exact MIS / MHS / WMIS for closed integer intervals. These are the classic
// sweep and DP routines; the rectangle code uses them on axis projections.

namespace rectdiag {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;  // lo <= hi; closed, so sharing an endpoint means intersecting
    std::int64_t w = 1;
};

struct IntervalMisResult {
    std::size_t size = 0;
    std::vector<int> chosen;  // indices into the input
};

struct IntervalMhsResult {
    std::size_t size = 0;
    std::vector<std::int64_t> points;
};

struct IntervalWmisResult {
    std::int64_t weight = 0;
    std::vector<int> chosen;
};

IntervalMisResult interval_mis(const std::vector<Interval>& items);
IntervalMhsResult interval_mhs(const std::vector<Interval>& items);
IntervalWmisResult interval_wmis(const std::vector<Interval>& items);

}  // namespace rectdiag
