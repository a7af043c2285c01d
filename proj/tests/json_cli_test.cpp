#include <doctest.h>

#include "brauerkit/canonical.hpp"
#include "brauerkit/json_io.hpp"
#include "support/fixtures.hpp"

using namespace brauerkit;

TEST_CASE("SB quiver JSON round trip") {
    for (const SBQuiver& q : {fixtures::ssb1(), fixtures::ssb2(), fixtures::ssb3()}) {
        SBQuiver back = sb_quiver_from_json(to_json(q));
        CHECK(back == q);
    }
    SBQuiver t = make_trivial_sb_quiver();
    CHECK(sb_quiver_from_json(to_json(t)) == t);
}

TEST_CASE("Brauer graph JSON round trip") {
    for (const BrauerGraph& g : {fixtures::fg1(), fixtures::fg2(), fixtures::fg4()}) {
        BrauerGraph back = brauer_graph_from_json(to_json(g));
        CHECK(back == g);
    }
}

TEST_CASE("emission is byte-stable") {
    CHECK(to_json(fixtures::ssb1()) == to_json(fixtures::ssb1()));
    CHECK(to_json(fixtures::fg1()) == to_json(fixtures::fg1()));
}

TEST_CASE("type detection") {
    CHECK(looks_like_sb_quiver(to_json(fixtures::ssb1())));
    CHECK(!looks_like_sb_quiver(to_json(fixtures::fg1())));
}

TEST_CASE("malformed JSON raises a parse error with position info") {
    CHECK_THROWS(sb_quiver_from_json("{\"vertices\": [1,"));
}

TEST_CASE("DOT export mentions every arrow and edge") {
    std::string dot_q = to_dot(fixtures::ssb1());
    CHECK(dot_q.find("digraph") != std::string::npos);
    CHECK(dot_q.find("v1 -> v2") != std::string::npos);
    std::string dot_g = to_dot(fixtures::fg1());
    CHECK(dot_g.find("graph") != std::string::npos);
    CHECK(dot_g.find("m=1") != std::string::npos);
    CHECK(dot_g.find("cyclic order") != std::string::npos);
}

TEST_CASE("renumbered structures stay isomorphic") {
    SBQuiver q = fixtures::ssb3();
    q.arrows[0].id = 42;
    for (Cycle& c : q.cycles)
        for (int& a : c.arrows)
            if (a == 1) a = 42;
    q.arrows.push_back(q.arrows.front());
    q.arrows.erase(q.arrows.begin());
    std::sort(q.arrows.begin(), q.arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    CHECK(isomorphic(renumbered(q), fixtures::ssb3()));
    CHECK(isomorphic(renumbered(fixtures::fg2()), fixtures::fg2()));
}
