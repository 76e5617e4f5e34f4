#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rectdiag/exact.hpp"
#include "rectdiag/sat_reduction.hpp"

using namespace rectdiag;

namespace {

// Fixture layouts with up to 3 clauses. Three-distinct-variable clauses make
// every formula with fewer than eight clauses satisfiable, so the sat side
// of the equivalence is what these exercise.
std::vector<CombLayout> small_fixtures() {
    std::vector<CombLayout> out;
    out.push_back({{"u", "v", "w"}, {{{1, -2, 3}, true}}});
    out.push_back({{"u", "v", "w"}, {{{1, -2, 3}, false}}});
    out.push_back({{"u", "v", "w"}, {{{-1, -2, -3}, true}}});
    out.push_back({{"a", "b", "c", "d"}, {{{1, 2, 3}, true}, {{2, 3, 4}, false}}});
    out.push_back({{"a", "b", "c", "d"}, {{{1, 2, 3}, true}, {{1, 3, 4}, true}}});
    out.push_back({{"a", "b", "c", "d", "e"}, {{{1, 2, 3}, true}, {{3, 4, 5}, true}}});
    out.push_back({{"a", "b", "c", "d", "e"},
                   {{{-1, 2, -3}, true}, {{3, -4, 5}, true}, {{1, 3, 5}, false}}});
    out.push_back({{"a", "b", "c", "d", "e", "f"},
                   {{{1, 2, 6}, true}, {{2, 3, 4}, true}, {{4, -5, 6}, true}}});
    out.push_back({{"a", "b", "c", "d", "e", "f"},
                   {{{1, -2, 3}, true}, {{-3, 4, 5}, true}, {{-4, 5, 6}, false}}});
    out.push_back({{"p", "q", "r", "s", "t"},
                   {{{-1, -2, -3}, true}, {{2, 3, 4}, false}, {{1, -4, 5}, true}}});
    out.push_back({{"p", "q", "r", "s", "t"},
                   {{{1, 2, 5}, true}, {{2, -3, 4}, true}, {{-1, 3, 5}, false}}});
    return out;
}

// Implication cycles x1->x2->x3->!x1 and !x1->x4->x5->x1, escapes killed by
// twin clauses on opposite sides: unsatisfiable and comb-embeddable.
CombLayout unsat_fixture() {
    CombLayout l;
    l.vars = {"y3", "x3", "y2", "x2", "y1", "x1", "y6", "x5", "y5", "x4", "y4"};
    auto put = [&](int a, int b, int c) {
        l.clauses.push_back({{a, b, c}, true});
        l.clauses.push_back({{a, b, -c}, false});
    };
    put(-6, 4, 5);
    put(-4, 2, 3);
    put(-2, -6, 1);
    put(6, 10, 11);
    put(-10, 8, 9);
    put(-8, 6, 7);
    return l;
}

}  // namespace

TEST_CASE("single clause example counts") {
    CombLayout l{{"u", "v", "w"}, {{{1, -2, 3}, true}}};
    ReducedInstance inst = reduce(l);
    CHECK(inst.family.size() == 3 * 14 + 9);
    CHECK(inst.target == 3 * 7 + 4);
    CHECK(classify(inst.family).count(ClassLabel::Intersecting));
    // every rect meets the diagonal by Family construction; roles cover all
    CHECK(inst.roles.size() == inst.family.size());
}

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(reduce({{"a", "b"}, {{{1, 2, 2}, true}}}), LayoutInvalid);
    CHECK_THROWS_AS(reduce({{"a", "b", "c", "d"}, {{{1, 2, 3}, true}}}), LayoutInvalid);
    // crossing combs on one side: middle leg of the outer pierces the inner
    CHECK_THROWS_AS(
        reduce({{"a", "b", "c", "d", "e"}, {{{1, 3, 5}, true}, {{2, 3, 4}, true}}}),
        LayoutInvalid);
    // same pair of clauses on opposite sides is fine
    CHECK_NOTHROW(
        reduce({{"a", "b", "c", "d", "e"}, {{{1, 3, 5}, true}, {{2, 3, 4}, false}}}));
}

TEST_CASE("necklace parity encodes literal signs") {
    CombLayout l{{"u", "v", "w"}, {{{1, -2, 3}, true}}};
    ReducedInstance inst = reduce(l);
    IntersectionGraph g = intersection_graph(inst.family);
    for (int s = 0; s < 3; ++s) {
        int leg = inst.legs[0][s];
        bool positive = l.clauses[0].lits[s] > 0;  // lits sorted by var here
        bool found = false;
        for (std::size_t v = 0; v < inst.necklaces.size(); ++v)
            for (std::size_t k = 0; k < inst.necklaces[v].size(); ++k)
                if (g.adj(leg, inst.necklaces[v][k])) {
                    CHECK((k % 2 == 0) == positive);
                    found = true;
                }
        CHECK(found);
    }
}

TEST_CASE("gadget properties hold on all fixtures") {
    for (const CombLayout& l : small_fixtures()) {
        ReducedInstance inst = reduce(l);
        GadgetReport rep = verify_gadget_properties(inst);
        CHECK_MESSAGE(rep.necklace_cycles_ok, rep.detail);
        CHECK_MESSAGE(rep.necklace_two_mis_ok, rep.detail);
        CHECK_MESSAGE(rep.clause_mis_ok, rep.detail);
        CHECK_MESSAGE(rep.clause_needs_vertical_ok, rep.detail);
        CHECK_MESSAGE(rep.conditional_extension_ok, rep.detail);
    }
}

TEST_CASE("satisfiability equivalence on the small fixtures") {
    auto fixtures = small_fixtures();
    CHECK(fixtures.size() >= 10);
    for (const CombLayout& l : fixtures) {
        ReducedInstance inst = reduce(l);
        bool sat = comb_layout_satisfiable(l);
        MisResult mis = mis_exact(intersection_graph(inst.family));
        CHECK(mis.value <= inst.target);
        CHECK_MESSAGE(sat == (mis.value == inst.target), "clauses=", l.clauses.size());
    }
}

TEST_CASE("unsatisfiable layout stays below the target") {
    CombLayout l = unsat_fixture();
    REQUIRE_FALSE(comb_layout_satisfiable(l));
    ReducedInstance inst = reduce(l);
    GadgetReport rep = verify_gadget_properties(inst);
    CHECK(rep.necklace_cycles_ok);
    CHECK(rep.conditional_extension_ok);
    MisResult mis = mis_exact(intersection_graph(inst.family));
    CHECK(mis.value < inst.target);
}
