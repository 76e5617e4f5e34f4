#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rectdiag/geometry.hpp"

// Polynomial reduction from planar 3-SAT comb layouts to diagonal-
// intersecting rectangle families: the formula is satisfiable iff the family
// has an independent set of size sum_v (6 d(v) + 1) + 4m.

namespace rectdiag {

struct CombClause {
    std::array<int, 3> lits;  // +-(1-based variable index), three distinct vars
    bool above = true;        // side of the diagonal the comb lives on
};

struct CombLayout {
    std::vector<std::string> vars;  // left-to-right along the diagonal
    std::vector<CombClause> clauses;
};

class LayoutInvalid : public std::runtime_error {
public:
    explicit LayoutInvalid(const std::string& why)
        : std::runtime_error("invalid comb layout: " + why) {}
};

struct SquareRole {
    enum Kind { NecklaceSquare, ClauseBand, ClauseLeg } kind = NecklaceSquare;
    int var = -1;     // necklace squares: variable index
    int ring = -1;    // necklace squares: position in the cycle (0-based)
    int clause = -1;  // bands/legs: clause index
    int detail = -1;  // bands: stack position 1..6; legs: literal slot 0..2
};

struct ReducedInstance {
    Family family;
    std::int64_t target = 0;  // sum_v (6 d(v) + 1) + 4m
    std::vector<SquareRole> roles;            // by family index
    std::vector<std::vector<int>> necklaces;  // per var: family indices by ring order
    std::vector<std::vector<int>> gadgets;    // per clause: 9 family indices
    std::vector<std::array<int, 3>> legs;     // per clause: leg family indices
};

ReducedInstance reduce(const CombLayout& layout);

struct GadgetReport {
    bool necklace_cycles_ok = false;       // every necklace graph is the even cycle
    bool necklace_two_mis_ok = false;      // exactly two maximum independent sets
    bool clause_mis_ok = false;            // every clause gadget alone has MIS 4
    bool clause_needs_vertical_ok = false; // bands alone reach at most 3
    bool conditional_extension_ok = false; // statement (4) per clause and variable
    std::string detail;                    // first failure, if any
};

GadgetReport verify_gadget_properties(const ReducedInstance& inst);

// Brute-force satisfiability over all assignments (for fixture validation).
bool comb_layout_satisfiable(const CombLayout& layout);

}  // namespace rectdiag
