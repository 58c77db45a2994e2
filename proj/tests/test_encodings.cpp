#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

#include "bnconcur/encodings.hpp"
#include "bnconcur/errors.hpp"
#include "bnconcur/explore.hpp"
#include "bnconcur/rpn_io.hpp"

using namespace bnconcur;

namespace {

struct ArcTriple {
    std::vector<int> pre, cont, post;
};

ArcTriple arcs(const RpnTransition& t) {
    return {t.pre.bits(), t.cont.bits(), t.post.bits()};
}

bool operator==(const ArcTriple& a, const ArcTriple& b) {
    return a.pre == b.pre && a.cont == b.cont && a.post == b.post;
}

} // namespace

TEST_CASE("network image of the running three-component example") {
    BnRpnImage img = bn_to_rpn(testutil::ex3());
    REQUIRE(img.n == 3);
    REQUIRE(img.net.num_places() == 6);
    CHECK(img.names == std::vector<std::string>{"x1", "x2", "x3"});

    const char* place_ids[] = {"1", "2", "3", "4", "5", "6"};
    const char* place_names[] = {"x1_0", "x2_0", "x3_0", "x1_1", "x2_1", "x3_1"};
    for (int p = 0; p < 6; ++p) {
        CHECK(img.net.places[p].id == place_ids[p]);
        CHECK(img.net.places[p].name == place_names[p]);
    }
    CHECK(img.place0(2) == 2);
    CHECK(img.place1(2) == 5);

    REQUIRE(img.net.num_transitions() == 7);
    const char* tids[] = {"x1+", "x1-", "x2+", "x2-", "x3+", "x3-1", "x3-2"};
    for (int t = 0; t < 7; ++t) {
        CHECK(img.net.transitions[t].id == tids[t]);
        CHECK(img.net.transitions[t].name == tids[t]);
    }
    // Up moves read the other literals of their clause; the two down
    // clauses of component 3 come out in clause order (x1 before !x2).
    CHECK(arcs(img.net.transitions[0]) == ArcTriple{{0}, {1}, {3}});
    CHECK(arcs(img.net.transitions[1]) == ArcTriple{{3}, {4}, {0}});
    CHECK(arcs(img.net.transitions[2]) == ArcTriple{{1}, {0}, {4}});
    CHECK(arcs(img.net.transitions[3]) == ArcTriple{{4}, {3}, {1}});
    CHECK(arcs(img.net.transitions[4]) == ArcTriple{{2}, {0, 4}, {5}});
    CHECK(arcs(img.net.transitions[5]) == ArcTriple{{5}, {3}, {2}});
    CHECK(arcs(img.net.transitions[6]) == ArcTriple{{5}, {1}, {2}});

    REQUIRE(img.tags.size() == 7);
    int vars[] = {0, 0, 1, 1, 2, 2, 2};
    bool ups[] = {true, false, true, false, true, false, false};
    int clauses[] = {0, 0, 0, 0, 0, 0, 1};
    for (int t = 0; t < 7; ++t) {
        CHECK(img.tags[t].var == vars[t]);
        CHECK(img.tags[t].up == ups[t]);
        CHECK(img.tags[t].clause == clauses[t]);
    }

    CHECK(img.net.initial == Marking::of({0, 1, 2}));
    BnRpnImage at_010 = bn_to_rpn(testutil::ex3(), parse_config("010"));
    CHECK(at_010.net.initial == Marking::of({0, 2, 4}));
    CHECK(at_010.net.marking_str(at_010.net.initial) == "{x1_0, x2_1, x3_0}");
}

TEST_CASE("configuration and marking maps invert each other") {
    CHECK(config_to_marking(parse_config("000")) == Marking::of({0, 1, 2}));
    CHECK(config_to_marking(parse_config("010")) == Marking::of({0, 2, 4}));
    CHECK(config_to_marking(parse_config("101")) == Marking::of({1, 3, 5}));
    for (const Config& x : all_configs(4))
        CHECK(marking_to_config(config_to_marking(x), 4) == x);

    CHECK_THROWS_AS(marking_to_config(Marking::of({0, 3, 1, 2}), 3), InputError);
    CHECK_THROWS_AS(marking_to_config(Marking::of({1, 2}), 3), InputError);
    CHECK_THROWS_AS(marking_to_config(Marking::of({0, 1, 2, 6}), 3), InputError);
}

TEST_CASE("stored image fixtures are exactly what the encoder emits") {
    BooleanNetwork neg3 = parse_bn("x1 = !x3\nx2 = !x1\nx3 = !x2\n");
    BnRpnImage img = bn_to_rpn(neg3, parse_config("111"));
    CHECK(save_rpn_json(img.net) == testutil::slurp(testutil::data_path("NEG3.rpn.json")));

    BooleanNetwork pos2 = parse_bn("x1 = x2\nx2 = x1\n");
    BnRpnImage img2 = bn_to_rpn(pos2, parse_config("01"));
    CHECK(save_rpn_json(img2.net) == testutil::slurp(testutil::data_path("POS2.rpn.json")));
}

TEST_CASE("caller-supplied clause lists are validated") {
    BooleanNetwork f = testutil::ex3();
    std::vector<Dnf> up, down;
    for (int i = 0; i < f.dim(); ++i) {
        ExprPtr xi = make_var(i);
        up.push_back(to_min_dnf(make_and({make_not(xi), f.functions[i]}), f.dim()));
        down.push_back(to_min_dnf(make_and({xi, make_not(f.functions[i])}), f.dim()));
    }
    BnRpnImage img = bn_to_rpn(f, up, down);
    CHECK(save_rpn_json(img.net) == save_rpn_json(bn_to_rpn(f).net));

    std::swap(up[0], down[0]);
    CHECK_THROWS_AS(bn_to_rpn(f, up, down), InputError);
}

TEST_CASE("image structure is recognized on loaded nets") {
    ReadPetriNet net = load_rpn_file(testutil::data_path("NEG3.rpn.json"));
    auto s = recognize_boolean_structure(net);
    REQUIRE(s.has_value());
    CHECK(s->n == 3);
    CHECK(s->names == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(s->var_of_place == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(s->val_of_place == std::vector<int>{0, 0, 0, 1, 1, 1});
    REQUIRE(s->tags.size() == 6);
    CHECK(s->tags[0].var == 0);
    CHECK(s->tags[0].up);
    CHECK(s->tags[1].var == 0);
    CHECK_FALSE(s->tags[1].up);

    BnRpnImage img = image_with_structure(net, *s);
    CHECK(marking_to_config(img.net.initial, 3) == parse_config("111"));
    CHECK(save_rpn_json(img.net) == save_rpn_json(net));
}

TEST_CASE("recognition falls back to name suffixes and transition pairing") {
    // Non-numeric ids, value-suffix names: paired by the suffixes.
    ReadPetriNet net = load_rpn_file(testutil::data_path("POS2.rpn.json"));
    for (auto& p : net.places) p.id = "place_" + p.name;
    auto s = recognize_boolean_structure(net);
    REQUIRE(s.has_value());
    CHECK(s->n == 2);
    CHECK(s->names == std::vector<std::string>{"x1", "x2"});
    CHECK(s->var_of_place == std::vector<int>{0, 1, 0, 1});
    CHECK(s->val_of_place == std::vector<int>{0, 0, 1, 1});

    // No usable ids or names: the transitions themselves give the pairing.
    ReadPetriNet two;
    two.places.push_back({"off", "off"});
    two.places.push_back({"on", "on"});
    RpnTransition t;
    t.id = t.name = "go";
    t.pre = Marking::of({0});
    t.post = Marking::of({1});
    two.transitions.push_back(t);
    two.initial = Marking::of({0});
    auto s2 = recognize_boolean_structure(two);
    REQUIRE(s2.has_value());
    CHECK(s2->n == 1);
    CHECK(s2->names == std::vector<std::string>{"x1"});
    CHECK(s2->var_of_place == std::vector<int>{0, 0});
    CHECK(s2->val_of_place[0] != s2->val_of_place[1]);
    REQUIRE(s2->tags.size() == 1);
    CHECK(s2->tags[0].var == 0);
    CHECK(s2->tags[0].up == (s2->val_of_place[1] == 1));

    BnRpnImage img = image_with_structure(two, *s2);
    CHECK(img.net.places[img.place0(0)].id == "off");
    CHECK(img.net.places[img.place1(0)].id == "on");
    CHECK(marking_to_config(img.net.initial, 1) == parse_config("0"));
}

TEST_CASE("nets without the image shape are rejected") {
    ReadPetriNet net4 = load_rpn_file(testutil::data_path("NET4.rpn.json"));
    CHECK_FALSE(recognize_boolean_structure(net4).has_value());
    ReadPetriNet net1 = load_rpn_file(testutil::data_path("NET1.rpn.json"));
    CHECK_FALSE(recognize_boolean_structure(net1).has_value());
}

TEST_CASE("place-transition image of the one-transition net") {
    ReadPetriNet net = load_rpn_file(testutil::data_path("NET1.rpn.json"));
    RpnBnImage img = rpn_to_bn(net);
    REQUIRE(img.bn.dim() == 4);
    CHECK(img.bn.names == std::vector<std::string>{"p1", "p2", "p4", "a"});
    CHECK(img.place_comp(2) == 2);
    CHECK(img.trans_comp(0) == 3);

    // Components: place keeps its token unless its consumer pulses, gains
    // one when a producer pulses; the transition pulses from enabledness
    // and stays up until its effect is visible.
    for (const Config& x : all_configs(4)) {
        bool p1 = x.get(0), p2 = x.get(1), p4 = x.get(2), a = x.get(3);
        CHECK(eval(img.bn.functions[0], x) == (p1 && !a));
        CHECK(eval(img.bn.functions[1], x) == p2);
        CHECK(eval(img.bn.functions[2], x) == (a || p4));
        CHECK(eval(img.bn.functions[3], x) == ((p1 && p2) || (a && (!p4 || p1))));
    }

    CHECK(img.config_of_marking(net.initial).str() == "1100");
    CHECK(img.is_marking_config(parse_config("1100")));
    CHECK_FALSE(img.is_marking_config(parse_config("1101")));
    CHECK(img.marking_of_config(parse_config("0110")) == Marking::of({1, 2}));
    CHECK_THROWS_AS(img.marking_of_config(parse_config("0011")), InputError);
}

TEST_CASE("place-transition image refuses loops and unsafe nets") {
    ReadPetriNet loopy;
    loopy.places.push_back({"p", "p"});
    loopy.places.push_back({"q", "q"});
    RpnTransition t;
    t.id = t.name = "t";
    t.pre = Marking::of({0});
    t.post = Marking::of({0, 1});
    loopy.transitions.push_back(t);
    loopy.initial = Marking::of({0});
    CHECK_THROWS_AS(rpn_to_bn(loopy), InputError);

    ReadPetriNet unsafe;
    unsafe.places.push_back({"p", "p"});
    unsafe.places.push_back({"q", "q"});
    RpnTransition u;
    u.id = u.name = "u";
    u.pre = Marking::of({0});
    u.post = Marking::of({1});
    unsafe.transitions.push_back(u);
    unsafe.initial = Marking::of({0, 1});
    CHECK_THROWS_AS(rpn_to_bn(unsafe), SafetyError);

    ReadPetriNet wide;
    for (int p = 0; p < 21; ++p) {
        std::string id = "p" + std::to_string(p + 1);
        wide.places.push_back({id, id});
    }
    CHECK_THROWS_AS(rpn_to_bn(wide), InputError);
}

TEST_CASE("marking reachability transfers across the place-transition image") {
    for (const char* file : {"NET1.rpn.json", "NET4.rpn.json"}) {
        ReadPetriNet net = load_rpn_file(testutil::data_path(file));
        RpnBnImage img = rpn_to_bn(net);

        auto atomic = marking_graph(net, net.initial, NetSemantics::Atomic);
        std::vector<Marking> direct(atomic.states.begin(), atomic.states.end());
        std::sort(direct.begin(), direct.end());

        auto async = reachable(img.bn, UpdateMode::Async,
                               img.config_of_marking(net.initial));
        std::vector<Marking> via_image;
        for (const Config& x : async.states)
            if (img.is_marking_config(x))
                via_image.push_back(img.marking_of_config(x));
        std::sort(via_image.begin(), via_image.end());

        CHECK(direct == via_image);
    }
}

TEST_CASE("image encodings are deterministic") {
    std::string a = save_rpn_json(bn_to_rpn(testutil::ex3()).net);
    std::string b = save_rpn_json(bn_to_rpn(testutil::ex3()).net);
    CHECK(a == b);
}
