#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rectdiag/geometry.hpp"

// Order characterization of diagonal-touching intersection graphs: a graph
// has a touching representation iff some vertex order avoids the crossing
// pattern a<b<c<d, (a,c),(b,d) in E, (b,c) not in E.

namespace rectdiag {

struct VertexOrder {
    std::vector<int> perm;  // perm[position] = vertex
};

// Returns the first violating quadruple (as vertices in order positions
// a<b<c<d) or nullopt when the order satisfies the condition.
std::optional<std::array<int, 4>> check_crossing_condition(const IntersectionGraph& g,
                                                           const VertexOrder& o);

struct OrderSearchResult {
    std::optional<VertexOrder> order;  // nullopt: no valid order exists
    std::uint64_t nodes = 0;
};

// Backtracking with incremental pruning; exact but exponential, for small n.
OrderSearchResult find_touching_order(const IntersectionGraph& g,
                                      std::optional<std::uint64_t> budget = std::nullopt);

class InvalidOrder : public std::runtime_error {
public:
    InvalidOrder() : std::runtime_error("order violates the crossing condition") {}
};

// Builds a diagonal-touching family realizing g: upper-right corners on D in
// order, each rect just large enough to reach its extreme neighbors.
// The result's rect ids equal the vertex ids of g.
Family order_to_representation(const IntersectionGraph& g, const VertexOrder& o);

}  // namespace rectdiag
