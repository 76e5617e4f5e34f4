#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectdiag/geometry.hpp"

// Exact solvers used as ground truth: branch-and-bound WMIS on intersection
// graphs and a candidate-point set-cover search for MHS.

namespace rectdiag {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t nodes)
        : std::runtime_error("search node budget exceeded after " + std::to_string(nodes) +
                             " nodes"),
          nodes(nodes) {}
    std::uint64_t nodes;
};

struct SolveStats {
    std::uint64_t nodes_explored = 0;
};

struct MisResult {
    std::int64_t value = 0;          // cardinality or weight
    std::vector<int> vertices;       // witness, sorted
    SolveStats stats;
};

struct MhsResult {
    std::size_t size = 0;
    std::vector<Point> points;
    SolveStats stats;
};

// Default node budget; RECTDIAG_NODE_BUDGET overrides it process-wide.
std::uint64_t default_node_budget();

MisResult mis_exact(const IntersectionGraph& g,
                    std::optional<std::uint64_t> budget = std::nullopt);
MisResult wmis_exact(const IntersectionGraph& g, const std::vector<Weight>& weights,
                     std::optional<std::uint64_t> budget = std::nullopt);

// Candidate points are (u^r_x, u^s_y) over all rect pairs: any hitting point
// can be pushed right then up until blocked by upper-right boundaries.
MhsResult mhs_exact(const Family& f, std::optional<std::uint64_t> budget = std::nullopt);
std::vector<Point> mhs_candidate_points(const Family& f);

// Largest number of rects any single point can hit (max over the corner grid).
std::size_t max_point_coverage(const Family& f);

struct GapReport {
    std::size_t n = 0;
    std::int64_t mis_lb = 0, mis_ub = 0;
    std::int64_t mhs_lb = 0, mhs_ub = 0;
    bool mis_exact_known = false;
    bool mhs_exact_known = false;
    double ratio_lb = 0.0;  // certified lower bound on mhs/mis
};

GapReport gap_report(const Family& f, std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace rectdiag
