#include "doctest.h"

#include "bnconcur/expr.hpp"

#include <functional>
#include <random>

using namespace bnconcur;

namespace {
const std::vector<std::string> xyz = {"x", "y", "z"};

Config cfg(std::uint32_t bits) { return Config(bits, 3); }
} // namespace

TEST_CASE("constant and variable evaluation") {
    CHECK(eval(make_const(true), cfg(0)));
    CHECK_FALSE(eval(make_const(false), cfg(7)));
    CHECK(eval(make_var(1), cfg(0b010)));
    CHECK_FALSE(eval(make_var(1), cfg(0b101)));
    CHECK_THROWS_AS(eval(make_var(3), cfg(0)), InputError);
}

TEST_CASE("connective collapsing") {
    // empty juncts collapse to their neutral element
    CHECK(eval(make_and({}), cfg(0)));
    CHECK_FALSE(eval(make_or({}), cfg(0)));
    ExprPtr single = make_and({make_var(0)});
    CHECK(to_string(*single, xyz) == "x");
}

TEST_CASE("parser handles precedence and parentheses") {
    ExprPtr e = parse_expr("!x & y | z", xyz);
    // (!x & y) | z
    CHECK(eval(e, cfg(0b010)));
    CHECK(eval(e, cfg(0b100)));
    CHECK_FALSE(eval(e, cfg(0b001)));
    ExprPtr f = parse_expr("!(x & (y | z))", xyz);
    CHECK(eval(f, cfg(0b101)) == false);
    CHECK(eval(f, cfg(0b010)) == true);
}

TEST_CASE("parser reports position on bad input") {
    CHECK_THROWS_AS(parse_expr("x &", xyz), ParseError);
    CHECK_THROWS_AS(parse_expr("w", xyz), ParseError);
    CHECK_THROWS_AS(parse_expr("x | | y", xyz), ParseError);
    try {
        parse_expr("x &\n& y", xyz);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        // random expression tree of depth <= 4
        std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
            int pick = depth == 0 ? int(rng() % 2) : int(rng() % 5);
            switch (pick) {
            case 0: return make_var(int(rng() % 3));
            case 1: return make_const(rng() % 2 == 0);
            case 2: return make_not(gen(depth - 1));
            case 3: return make_and({gen(depth - 1), gen(depth - 1)});
            default: return make_or({gen(depth - 1), gen(depth - 1)});
            }
        };
        ExprPtr e = gen(4);
        ExprPtr back = parse_expr(to_string(*e, xyz), xyz);
        for (std::uint32_t b = 0; b < 8; ++b)
            CHECK(eval(e, cfg(b)) == eval(back, cfg(b)));
    }
}

TEST_CASE("support collects referenced variables") {
    CHECK(support(*parse_expr("x & !z", xyz)) == 0b101);
    CHECK(support(*parse_expr("1", xyz)) == 0);
    // semantically vacuous occurrences still count as syntactic support
    CHECK(support(*parse_expr("y | !y", xyz)) == 0b010);
}

TEST_CASE("substitution replaces variables by expressions") {
    ExprPtr e = parse_expr("x & y", xyz);
    std::vector<ExprPtr> map(3);
    map[0] = parse_expr("y | z", xyz);
    ExprPtr s = substitute(e, map);
    // (y | z) & y == y
    for (std::uint32_t b = 0; b < 8; ++b)
        CHECK(eval(s, cfg(b)) == cfg(b).get(1));
}
