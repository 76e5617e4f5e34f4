#include "rectdiag/intervals.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rectdiag {

namespace {

std::vector<int> by_right_endpoint(const std::vector<Interval>& items) {
    std::vector<int> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (items[a].hi != items[b].hi) return items[a].hi < items[b].hi;
        return a < b;
    });
    return order;
}

}  // namespace

IntervalMisResult interval_mis(const std::vector<Interval>& items) {
    IntervalMisResult res;
    std::int64_t last = std::numeric_limits<std::int64_t>::min();
    bool first = true;
    for (int i : by_right_endpoint(items)) {
        if (first || items[i].lo > last) {
            res.chosen.push_back(i);
            last = items[i].hi;
            first = false;
        }
    }
    res.size = res.chosen.size();
    return res;
}

IntervalMhsResult interval_mhs(const std::vector<Interval>& items) {
    IntervalMhsResult res;
    std::int64_t last = std::numeric_limits<std::int64_t>::min();
    bool first = true;
    for (int i : by_right_endpoint(items)) {
        if (first || items[i].lo > last) {
            last = items[i].hi;
            res.points.push_back(last);
            first = false;
        }
    }
    res.size = res.points.size();
    return res;
}

IntervalWmisResult interval_wmis(const std::vector<Interval>& items) {
    const std::size_t n = items.size();
    IntervalWmisResult res;
    if (n == 0) return res;

    std::vector<int> order = by_right_endpoint(items);
    std::vector<std::int64_t> his(n);
    for (std::size_t k = 0; k < n; ++k) his[k] = items[order[k]].hi;

    // dp[k] = best weight using the first k intervals in right-endpoint order
    std::vector<std::int64_t> dp(n + 1, 0);
    std::vector<int> pred(n);  // # of intervals ending strictly before items[order[k]].lo
    for (std::size_t k = 0; k < n; ++k) {
        const Interval& it = items[order[k]];
        pred[k] = static_cast<int>(std::lower_bound(his.begin(), his.begin() + k, it.lo) -
                                   his.begin());
        dp[k + 1] = std::max(dp[k], dp[pred[k]] + it.w);
    }
    res.weight = dp[n];

    for (std::size_t k = n; k > 0;) {
        if (dp[k] == dp[k - 1]) {
            --k;
        } else {
            res.chosen.push_back(order[k - 1]);
            k = pred[k - 1];
        }
    }
    std::reverse(res.chosen.begin(), res.chosen.end());
    return res;
}

}  // namespace rectdiag
