#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

#include "bnconcur/encodings.hpp"
#include "bnconcur/errors.hpp"
#include "bnconcur/mp.hpp"

using namespace bnconcur;

namespace {

std::vector<std::string> succ_strs(const BooleanNetwork& f, const std::string& s) {
    std::vector<std::string> out;
    for (const Config3& y : mp_successors(f, parse_config3(s)))
        out.push_back(y.str());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("three-valued configurations") {
    Config3 x = parse_config3("0*1");
    CHECK(x.n == 3);
    CHECK(x.get(0) == Tri::Zero);
    CHECK(x.get(1) == Tri::Half);
    CHECK(x.get(2) == Tri::One);
    CHECK(x.str() == "0*1");
    x.set(1, Tri::One);
    CHECK(x.str() == "011");
    CHECK(x.boolean());
    CHECK(x.to_config() == parse_config("011"));
    CHECK_FALSE(parse_config3("0*1").boolean());

    CHECK(Config3::of_config(parse_config("10")).str() == "10");

    // The in-between value sorts below both Boolean values.
    CHECK(parse_config3("*1") < parse_config3("01"));
    CHECK_FALSE(parse_config3("01") < parse_config3("0*"));
    CHECK(parse_config3("00") < parse_config3("01"));

    CHECK_THROWS_AS(parse_config3("01x"), InputError);
    CHECK_THROWS_AS(parse_config3(""), InputError);
}

TEST_CASE("boolean completions") {
    auto strs = [](const Config3& x) {
        std::vector<std::string> out;
        for (const Config& c : approx(x)) out.push_back(c.str());
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(strs(parse_config3("*00")) == sorted({"000", "100"}));
    CHECK(strs(parse_config3("010")) == sorted({"010"}));
    CHECK(strs(parse_config3("**0")) == sorted({"000", "100", "010", "110"}));
    CHECK(approx(parse_config3("***")).size() == 8);
}

TEST_CASE("one-coordinate moves of the three-valued semantics") {
    BooleanNetwork ex2 = testutil::ex2();
    BooleanNetwork ex3 = testutil::ex3();

    CHECK(succ_strs(ex2, "000") == sorted({"*00"}));
    CHECK(succ_strs(ex3, "100").empty());
    CHECK(succ_strs(ex3, "000") == sorted({"*00", "0*0"}));
    CHECK(succ_strs(ex3, "*00") == sorted({"100", "**0"}));
    CHECK(succ_strs(ex3, "**0") ==
          sorted({"0*0", "1*0", "*00", "*10", "***"}));
}

TEST_CASE("the cascade overtakes under the three-valued semantics") {
    BooleanNetwork f = testutil::ex2();
    const char* chain[] = {"000", "*00", "**0", "***", "**1"};
    for (int k = 0; k + 1 < 5; ++k) {
        auto succ = succ_strs(f, chain[k]);
        CHECK(std::binary_search(succ.begin(), succ.end(),
                                 std::string(chain[k + 1])));
    }

    auto reach = [&](const char* to) {
        return mp_reachable(f, parse_config3("000"), parse_config3(to));
    };
    CHECK(reach("000"));
    CHECK(reach("110"));
    CHECK(reach("111"));
    CHECK_FALSE(reach("010"));
    CHECK_FALSE(reach("011"));
    CHECK_FALSE(reach("001"));
}

TEST_CASE("moves are justified by completions") {
    std::mt19937 rng(8092);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 4);
        BooleanNetwork f = testutil::random_bn(rng, n);
        std::uint64_t space = 1;
        for (int i = 0; i < n; ++i) space *= 3;
        for (std::uint64_t key = 0; key < space; ++key) {
            Config3 x(0, n);
            std::uint64_t k = key;
            for (int i = 0; i < n; ++i) {
                x.set(i, static_cast<Tri>(k % 3));
                k /= 3;
            }
            for (const Config3& y : mp_successors(f, x)) {
                CHECK(y != x);
                int moved = -1;
                for (int i = 0; i < n; ++i)
                    if (y.get(i) != x.get(i)) {
                        CHECK(moved == -1);
                        moved = i;
                    }
                REQUIRE(moved >= 0);
                bool justified = false;
                if (x.get(moved) == Tri::Half) {
                    REQUIRE(y.get(moved) != Tri::Half);
                    bool target = y.get(moved) == Tri::One;
                    for (const Config& c : approx(x))
                        justified |= eval(f.functions[moved], c) == target;
                } else {
                    CHECK(y.get(moved) == Tri::Half);
                    bool cur = x.get(moved) == Tri::One;
                    for (const Config& c : approx(x))
                        justified |= eval(f.functions[moved], c) != cur;
                }
                CHECK(justified);
            }
        }
    }
}

TEST_CASE("an asynchronous flip factors into two three-valued moves") {
    std::mt19937 rng(9105);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 4);
        BooleanNetwork f = testutil::random_bn(rng, n);
        for (const Config& x : all_configs(n))
            for (const Config& y : async_successors(f, x)) {
                int i = delta(x, y)[0];
                Config3 a = Config3::of_config(x);
                Config3 mid = a;
                mid.set(i, Tri::Half);
                auto first = mp_successors(f, a);
                CHECK(std::find(first.begin(), first.end(), mid) != first.end());
                auto second = mp_successors(f, mid);
                CHECK(std::find(second.begin(), second.end(),
                                Config3::of_config(y)) != second.end());
            }
    }
}

TEST_CASE("the in-between transient of any generalized step is reachable") {
    // Flipping W simultaneously always passes through the state with all of
    // W in between: each blur is justified by the source completion. The
    // resolution half makes no such promise (see the next case).
    std::mt19937 rng(1166);
    std::vector<BooleanNetwork> sample{testutil::ex3()};
    for (int trial = 0; trial < 25; ++trial)
        sample.push_back(testutil::random_bn(rng, 2 + int(rng() % 3)));
    for (const BooleanNetwork& f : sample) {
        for (const Config& x : all_configs(f.dim())) {
            for (const Config& y : general_successors(f, x)) {
                Config3 mid = Config3::of_config(x);
                for (int i : delta(x, y)) mid.set(i, Tri::Half);
                CHECK(mp_reachable(f, Config3::of_config(x), mid));
            }
        }
    }
}

TEST_CASE("three-valued reach neither contains nor is contained in the "
          "other modes") {
    // Once a coordinate settles, resolving the next one re-reads the settled
    // value; a simultaneous flip that relied on the old value is lost. The
    // mutual toggle is the smallest witness.
    BooleanNetwork toggle = parse_bn("x1 = !x2\nx2 = !x1\n");
    Config x = parse_config("00"), y = parse_config("11");
    auto gen = general_successors(toggle, x);
    CHECK(std::find(gen.begin(), gen.end(), y) != gen.end());
    CHECK_FALSE(
        mp_reachable(toggle, Config3::of_config(x), Config3::of_config(y)));

    // Same shape inside the running example, against both modes.
    BooleanNetwork f = testutil::ex3();
    IntervalBn e = interval_encode(f);
    Config a = parse_config("000"), b = parse_config("111");
    CHECK(reachable(e.bn, UpdateMode::Async, e.alpha(a)).has_state(e.alpha(b)));
    CHECK_FALSE(mp_reachable(f, Config3::of_config(a), Config3::of_config(b)));
    CHECK_FALSE(mp_reachable(f, Config3::of_config(a),
                             Config3::of_config(parse_config("110"))));

    // The cascade goes the other way: it satisfies both containments, and
    // reaches 111 in between-values only (no mode gets there Boolean-wise).
    BooleanNetwork g = testutil::ex2();
    IntervalBn eg = interval_encode(g);
    for (const Config& s : all_configs(3)) {
        auto gr = reachable(g, UpdateMode::General, s);
        auto ir = reachable(eg.bn, UpdateMode::Async, eg.alpha(s));
        MpGraph mg = mp_graph(g, Config3::of_config(s));
        for (const Config& t : all_configs(3)) {
            bool mp = mg.has_state(Config3::of_config(t));
            if (gr.has_state(t)) CHECK(mp);
            if (ir.has_state(eg.alpha(t))) CHECK(mp);
        }
    }
    CHECK(mp_reachable(g, parse_config3("000"), parse_config3("**1")));
}

TEST_CASE("move graph labels name the moved coordinate") {
    BooleanNetwork f = testutil::ex2();
    MpGraph g = mp_graph(f, parse_config3("000"));
    bool seen = false;
    for (const auto& e : g.edges) {
        CHECK(e.src.get(e.label) != e.dst.get(e.label));
        if (e.src.str() == "000") {
            CHECK(e.label == 0);
            CHECK(e.dst.str() == "*00");
            seen = true;
        }
    }
    CHECK(seen);

    MpGraph again = mp_graph(f, parse_config3("000"));
    CHECK(g.edges == again.edges);
}

TEST_CASE("exploration stops at the state budget") {
    ExploreBudget tight;
    tight.max_states = 3;
    CHECK_THROWS_AS(mp_reachable(testutil::ex2(), parse_config3("000"),
                                 parse_config3("010"), tight),
                    BudgetError);
}
