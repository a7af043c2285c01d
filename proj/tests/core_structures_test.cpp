#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "brauerkit/canonical.hpp"
#include "brauerkit/derived.hpp"
#include "brauerkit/sb_quiver.hpp"
#include "support/fixtures.hpp"

using namespace brauerkit;

TEST_CASE("paper triangle validates cleanly") {
    CHECK(validate(fixtures::ssb1()).empty());
    CHECK(validate(fixtures::ssb2()).empty());
    CHECK(validate(fixtures::ssb3()).empty());
    CHECK(validate(fixtures::multiplex()).empty());
}

TEST_CASE("a multiplicity-1 loop cycle is rejected") {
    SBQuiver bad = make_sb_quiver({1}, {{1, 1, 1}}, {{{1}, 1}});
    auto report = validate(bad);
    REQUIRE(!report.empty());
    CHECK(report.front().find("condition (3)") != std::string::npos);
}

TEST_CASE("dropping an arrow from a cycle breaks the partition") {
    SBQuiver q = fixtures::ssb2();
    q.cycles[0].arrows.pop_back();  // removes the loop from the only cycle
    auto report = validate(q);
    REQUIRE(!report.empty());
    bool partition = false;
    for (const auto& msg : report)
        if (msg.find("not partitioned") != std::string::npos) partition = true;
    CHECK(partition);
}

TEST_CASE("cycle lengths add up to the arrow count") {
    for (const SBQuiver& q : {fixtures::ssb1(), fixtures::ssb2(), fixtures::ssb3(),
                              fixtures::multiplex()}) {
        size_t total = 0;
        for (const Cycle& c : q.cycles) total += c.arrows.size();
        CHECK(total == q.arrows.size());
    }
}

TEST_CASE("next_arrow walks each cycle") {
    SBQuiver q = fixtures::ssb1();
    CHECK(next_arrow(q, 1) == 2);  // alpha -> alpha'
    CHECK(next_arrow(q, 2) == 1);
    SBQuiver q2 = fixtures::ssb2();
    CHECK(next_arrow(q2, 3) == 4);  // gamma -> delta in the 4-cycle
    CHECK(next_arrow(q2, 4) == 1);
    SBQuiver loop = fixtures::one_loop(2);
    CHECK(next_arrow(loop, 1) == 1);
    CHECK_THROWS_AS(next_arrow(q, 99), std::invalid_argument);
}

TEST_CASE("multiplex detection") {
    SBQuiver q = fixtures::ssb1();
    for (int v : {1, 2, 3}) CHECK(!is_multiplex(q, v));
    SBQuiver m = fixtures::multiplex();
    CHECK(is_multiplex(m, 1));
    CHECK(is_multiplex(m, 3));
    CHECK(!is_multiplex(m, 2));
    CHECK(!is_multiplex(fixtures::one_loop(3), 1));
    CHECK_THROWS_AS(is_multiplex(q, 42), std::invalid_argument);
}

TEST_CASE("opposite is an involution and preserves structure") {
    for (const SBQuiver& q : {fixtures::ssb1(), fixtures::ssb2(), fixtures::ssb3(),
                              fixtures::multiplex()}) {
        SBQuiver op = opposite(q);
        CHECK(validate(op).empty());
        CHECK(opposite(op) == q);
        for (int v : q.vertices) CHECK(is_multiplex(q, v) == is_multiplex(op, v));
        CHECK(fingerprint(op) == fingerprint(q));
    }
    BrauerGraph g = fixtures::fg1();
    CHECK(opposite(opposite(g)) == g);
    CHECK(validate(opposite(g)).empty());
}

TEST_CASE("opposite of the 4-cycle reverses it") {
    SBQuiver op = opposite(fixtures::ssb2());
    CHECK(op.cycles[0].arrows == std::vector<int>{4, 3, 2, 1});
    CHECK(op.arrow(1).tail == 2);
    CHECK(op.arrow(1).head == 1);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    for (const SBQuiver& q : {fixtures::ssb1(), fixtures::ssb2(), fixtures::ssb3()}) {
        std::string base = canonical_form(q);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> vperm = q.vertices;
            std::shuffle(vperm.begin(), vperm.end(), rng);
            std::map<int, int> vmap;
            for (size_t i = 0; i < vperm.size(); ++i) vmap[q.vertices[i]] = vperm[i];
            std::vector<int> aids;
            for (const Arrow& a : q.arrows) aids.push_back(a.id);
            std::vector<int> aperm = aids;
            std::shuffle(aperm.begin(), aperm.end(), rng);
            std::map<int, int> amap;
            for (size_t i = 0; i < aids.size(); ++i) amap[aids[i]] = aperm[i];

            SBQuiver relabeled = q;
            for (int& v : relabeled.vertices) v = vmap.at(v);
            std::sort(relabeled.vertices.begin(), relabeled.vertices.end());
            for (Arrow& a : relabeled.arrows) {
                a.id = amap.at(a.id);
                a.tail = vmap.at(a.tail);
                a.head = vmap.at(a.head);
            }
            std::sort(relabeled.arrows.begin(), relabeled.arrows.end(),
                      [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
            for (Cycle& c : relabeled.cycles)
                for (int& a : c.arrows) a = amap.at(a);
            std::rotate(relabeled.cycles.begin(), relabeled.cycles.begin() + trial % relabeled.cycles.size(),
                        relabeled.cycles.end());
            CHECK(validate(relabeled).empty());
            CHECK(canonical_form(relabeled) == base);
        }
    }
}

TEST_CASE("canonical form distinguishes different structures") {
    CHECK(canonical_form(fixtures::ssb1()) != canonical_form(fixtures::ssb2()));
    CHECK(canonical_form(fixtures::fg1()) != canonical_form(fixtures::fg2()));
}

TEST_CASE("mirror of a chiral graph is not isomorphic to it") {
    // Two inequivalent cyclic orders at the central vertex of a 3-star with
    // distinguished leaves (multiplicities 1, 2, 3 break the symmetry).
    BrauerGraph g = graph_from_orders({{1, {1, 2, 3}}, {1, {1}}, {2, {2}}, {3, {3}}});
    BrauerGraph mirror = opposite(g);
    CHECK(validate(mirror).empty());
    CHECK(!isomorphic(g, mirror));
    CHECK(isomorphic(g, g));
}

TEST_CASE("trivial quiver round trip") {
    SBQuiver t = make_trivial_sb_quiver();
    CHECK(validate(t).empty());
    CHECK(canonical_form(t) == "trivial");
}
