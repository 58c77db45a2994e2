#include "doctest.h"

#include "bnconcur/rpn_io.hpp"

#include "helpers.hpp"

using namespace bnconcur;
using testutil::data_path;
using testutil::slurp;

TEST_CASE("fixture files are in canonical form") {
    for (const char* name :
         {"NET4.rpn.json", "NEG3.rpn.json", "POS2.rpn.json", "NET1.rpn.json"}) {
        std::string text = slurp(data_path(name));
        CHECK(save_rpn_json(load_rpn_json(text)) == text);
    }
}

TEST_CASE("omitted fields default sensibly") {
    ReadPetriNet n = load_rpn_json(R"({
        "places": [{"id": "p"}, {"id": "q", "marked": true}],
        "transitions": [{"id": "t", "pre": ["q"]}]
    })");
    CHECK(n.places[0].name == "p");
    CHECK(n.initial == Marking::of({1}));
    CHECK(n.transitions[0].cont.empty());
    CHECK(n.transitions[0].post.empty());
}

TEST_CASE("bad nets are rejected with input errors") {
    CHECK_THROWS_AS(load_rpn_json("{"), InputError);
    CHECK_THROWS_AS(load_rpn_json(R"({"places": []})"), InputError);
    // duplicate place id
    CHECK_THROWS_AS(load_rpn_json(R"({
        "places": [{"id": "p"}, {"id": "p"}],
        "transitions": []
    })"),
                    InputError);
    // arc to an unknown place
    CHECK_THROWS_AS(load_rpn_json(R"({
        "places": [{"id": "p"}],
        "transitions": [{"id": "t", "pre": ["zzz"]}]
    })"),
                    InputError);
    // empty preset
    CHECK_THROWS_AS(load_rpn_json(R"({
        "places": [{"id": "p"}],
        "transitions": [{"id": "t", "pre": []}]
    })"),
                    InputError);
}

TEST_CASE("save orders places, transitions and arcs by id") {
    ReadPetriNet n = load_rpn_json(R"({
        "places": [{"id": "b"}, {"id": "a"}, {"id": "c", "marked": true}],
        "transitions": [
            {"id": "u", "pre": ["c"], "post": ["b", "a"]},
            {"id": "t", "pre": ["b", "a"]}
        ]
    })");
    std::string text = save_rpn_json(n);
    CHECK(text.find("\"a\"") < text.find("\"b\""));
    CHECK(text.find("\"t\"") < text.find("\"u\""));
    ReadPetriNet back = load_rpn_json(text);
    CHECK(save_rpn_json(back) == text);
    CHECK(back.initial == Marking::of({back.place_index("c")}));
}

TEST_CASE("dot output renders markings and step labels") {
    ReadPetriNet n = load_rpn_file(data_path("NET4.rpn.json"));
    MarkingGraph g = marking_graph(n, n.initial, NetSemantics::Step);
    std::string dot = marking_graph_dot(n, g);
    CHECK(dot.find("\"{p1, p2, p3}\"") != std::string::npos);
    CHECK(dot.find("label=\"{a, b}\"") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);

    std::string json = marking_graph_json(n, g);
    CHECK(json.find("\"states\"") != std::string::npos);
    CHECK(json.find("\"{p3, p4, p5}\"") != std::string::npos);
}

TEST_CASE("dot escaping") {
    CHECK(dot_escape("a\"b\\c") == "a\\\"b\\\\c");
}
