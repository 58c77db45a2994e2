#include "doctest.h"

#include "bnconcur/influence.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <random>

using namespace bnconcur;
using testutil::ex3;

TEST_CASE("influence edges of the mutual-inhibition fixture") {
    InfluenceGraph g = influence_graph(ex3());
    CHECK(g.locally_monotonic());
    // x2 -| x1, x1 -| x2, x1 -| x3, x2 -> x3 and nothing else
    std::vector<SignedEdge> want = {
        {0, 1, false}, {0, 2, false}, {1, 0, false}, {1, 2, true}};
    CHECK(g.edges() == want);
    CHECK(g.has(1, 0, false));
    CHECK_FALSE(g.has(1, 0, true));
    CHECK_FALSE(g.has(2, 0, false));
}

TEST_CASE("vacuous occurrences produce no edge") {
    BooleanNetwork f = parse_bn("a = b | !b\nb = a\n");
    InfluenceGraph g = influence_graph(f);
    CHECK_FALSE(g.has(1, 0, true));
    CHECK_FALSE(g.has(1, 0, false));
    CHECK(g.has(0, 1, true));
}

TEST_CASE("non-monotonic dependency carries both signs") {
    BooleanNetwork f = parse_bn("a = a & !b | !a & b\nb = b\n");
    InfluenceGraph g = influence_graph(f);
    CHECK(g.has(1, 0, true));
    CHECK(g.has(1, 0, false));
    CHECK_FALSE(g.locally_monotonic());
}

TEST_CASE("toggle pair forms the only cycle, and it is positive-even") {
    InfluenceGraph g = influence_graph(ex3());
    std::vector<Cycle> cycles = enumerate_cycles(g);
    REQUIRE(cycles.size() == 1);
    const Cycle& c = cycles[0];
    CHECK(c.length() == 2);
    CHECK(c.positive()); // two negative edges
    CHECK(nope_cycles(g) == cycles);
}

TEST_CASE("three-negation loop is a negative-odd cycle") {
    BooleanNetwork f = parse_bn("x1 = !x3\nx2 = !x1\nx3 = !x2\n");
    std::vector<Cycle> cycles = enumerate_cycles(influence_graph(f));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 3);
    CHECK_FALSE(cycles[0].positive());
    CHECK(nope_cycles(influence_graph(f)).size() == 1);
}

TEST_CASE("nope excludes negative-even and positive-odd cycles") {
    // a -| b -> a: negative two-cycle, not NOPE
    BooleanNetwork f = parse_bn("a = !b\nb = a\n");
    InfluenceGraph g = influence_graph(f);
    REQUIRE(enumerate_cycles(g).size() == 1);
    CHECK(nope_cycles(g).empty());
    // positive self-loop: length one, positive, not NOPE
    BooleanNetwork h = parse_bn("a = a\n");
    CHECK(enumerate_cycles(influence_graph(h)).size() == 1);
    CHECK(nope_cycles(influence_graph(h)).empty());
}

TEST_CASE("critical cycles require every edge frustrated") {
    BooleanNetwork f = ex3();
    // at 000 both negative edges connect equal values: frustrated
    CHECK(critical_cycles(f, parse_config("000")).size() == 1);
    // at 010 the endpoint values differ, defusing the negative edges
    CHECK(critical_cycles(f, parse_config("010")).empty());
    CHECK(critical_cycles(f, parse_config("110")).size() == 1);
}

TEST_CASE("critical cycles reject non-monotonic networks") {
    BooleanNetwork f = parse_bn("a = a & !b | !a & b\nb = a\n");
    CHECK_THROWS_AS(critical_cycles(f, parse_config("00")), InputError);
}

TEST_CASE("cycle enumeration is budgeted") {
    // complete signed digraph on 5 nodes has plenty of elementary cycles
    std::string text;
    for (int i = 0; i < 5; ++i) {
        text += "n" + std::to_string(i + 1) + " = ";
        bool first = true;
        for (int j = 0; j < 5; ++j) {
            if (j == i) continue;
            if (!first) text += " | ";
            text += "n" + std::to_string(j + 1);
            first = false;
        }
        text += "\n";
    }
    BooleanNetwork f = parse_bn(text);
    CHECK_THROWS_AS(enumerate_cycles(influence_graph(f), 10), BudgetError);
}

TEST_CASE("johnson enumeration agrees with brute-force walks") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        BooleanNetwork f = testutil::random_bn(rng, 3);
        InfluenceGraph g = influence_graph(f);
        std::vector<Cycle> cycles = enumerate_cycles(g);
        // brute force: all vertex sequences up to length 3 forming a cycle,
        // canonically rooted at their smallest vertex
        std::vector<Cycle> expect;
        std::vector<SignedEdge> edges = g.edges();
        auto arc = [&](int a, int b, bool pos) {
            return std::find(edges.begin(), edges.end(),
                             SignedEdge{a, b, pos}) != edges.end();
        };
        for (int a = 0; a < 3; ++a)
            for (int pa = 0; pa < 2; ++pa)
                if (arc(a, a, pa))
                    expect.push_back(Cycle{{{a, a, pa == 1}}});
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int pa = 0; pa < 2; ++pa)
                    for (int pb = 0; pb < 2; ++pb)
                        if (arc(a, b, pa == 1) && arc(b, a, pb == 1))
                            expect.push_back(Cycle{
                                {{a, b, pa == 1}, {b, a, pb == 1}}});
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    if (!(a < b && a < c) || b == c) continue;
                    for (int pa = 0; pa < 2; ++pa)
                        for (int pb = 0; pb < 2; ++pb)
                            for (int pc = 0; pc < 2; ++pc)
                                if (arc(a, b, pa == 1) && arc(b, c, pb == 1) &&
                                    arc(c, a, pc == 1))
                                    expect.push_back(
                                        Cycle{{{a, b, pa == 1},
                                               {b, c, pb == 1},
                                               {c, a, pc == 1}}});
                }
        std::sort(expect.begin(), expect.end());
        std::sort(cycles.begin(), cycles.end());
        CHECK(cycles == expect);
    }
}

TEST_CASE("dot rendering marks negative edges") {
    std::string dot = influence_dot(influence_graph(ex3()), ex3().names);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("\"x2\" -> \"x3\"") != std::string::npos);
}
