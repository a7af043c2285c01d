#pragma once

#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/sb_quiver.hpp"

// Recurring small instances used across the suites.
namespace fixtures {

using brauerkit::BrauerGraph;
using brauerkit::SBQuiver;

// Triangle of three 2-cycles, all multiplicity 1.
inline SBQuiver ssb1() {
    return brauerkit::make_sb_quiver(
        {1, 2, 3},
        {{1, 1, 2}, {2, 2, 1}, {3, 2, 3}, {4, 3, 2}, {5, 3, 1}, {6, 1, 3}},
        {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, 1}});
}

// One 4-cycle through a loop at vertex 1, multiplicity 2.
inline SBQuiver ssb2() {
    return brauerkit::make_sb_quiver({1, 2, 3},
                                     {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}, {4, 1, 1}},
                                     {{{1, 2, 3, 4}, 2}});
}

// Two 3-cycles sharing vertices 1 and 2, multiplicity 1 each.
inline SBQuiver ssb3() {
    return brauerkit::make_sb_quiver(
        {1, 2, 3, 4},
        {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}, {4, 1, 2}, {5, 2, 4}, {6, 4, 1}},
        {{{1, 2, 3}, 1}, {{4, 5, 6}, 1}});
}

// Multiplex at vertex 1: a 3-cycle and a 2-cycle both through 1 and 3.
inline SBQuiver multiplex() {
    return brauerkit::make_sb_quiver(
        {1, 2, 3}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}, {4, 1, 3}, {5, 3, 1}},
        {{{1, 2, 3}, 1}, {{4, 5}, 1}});
}

// One vertex with a single loop of the given multiplicity.
inline SBQuiver one_loop(int mult) {
    return brauerkit::make_sb_quiver({1}, {{1, 1, 1}}, {{{1}, mult}});
}

// Expected right mutations at vertex 1, up to isomorphism.

inline SBQuiver ssb1_mutated() {
    return brauerkit::make_sb_quiver({1, 2, 3},
                                     {{1, 1, 2}, {2, 2, 1}, {3, 1, 3}, {4, 3, 1}},
                                     {{{1, 2, 3, 4}, 1}});
}

inline SBQuiver ssb2_mutated() {
    return brauerkit::make_sb_quiver(
        {1, 2, 3}, {{1, 1, 1}, {2, 1, 2}, {3, 2, 1}, {4, 2, 3}, {5, 3, 2}},
        {{{1, 2, 3}, 1}, {{4, 5}, 2}});
}

inline SBQuiver ssb3_mutated() {
    return brauerkit::make_sb_quiver(
        {1, 2, 3, 4},
        {{1, 1, 3}, {2, 3, 2}, {3, 2, 1}, {4, 1, 4}, {5, 4, 2}, {6, 2, 1}},
        {{{1, 2, 3}, 1}, {{4, 5, 6}, 1}});
}

inline SBQuiver multiplex_mutated() {
    return brauerkit::make_sb_quiver(
        {1, 2, 3}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}, {4, 2, 1}, {5, 1, 2}},
        {{{1, 2, 3}, 1}, {{4, 5}, 1}});
}

// Flip examples: graphs before and after flipping edge 1.

inline BrauerGraph fg1() {
    return brauerkit::graph_from_orders({{1, {1, 2}}, {1, {2, 3}}, {1, {3, 1}}});
}

inline BrauerGraph fg1_flipped() {
    return brauerkit::graph_from_orders({{1, {2}}, {1, {2, 1, 3, 1}}, {1, {3}}});
}

inline BrauerGraph fg2() {
    return brauerkit::graph_from_orders({{2, {1, 1, 2, 3}}, {1, {2}}, {1, {3}}});
}

inline BrauerGraph fg2_flipped() {
    return brauerkit::graph_from_orders({{2, {2, 3}}, {1, {2, 1, 1}}, {1, {3}}});
}

inline BrauerGraph fg3() {
    return brauerkit::graph_from_orders(
        {{1, {1, 2, 3}}, {1, {1, 2, 4}}, {1, {3}}, {1, {4}}});
}

inline BrauerGraph fg3_flipped() {
    return brauerkit::graph_from_orders(
        {{1, {2, 1, 3}}, {1, {2, 1, 4}}, {1, {3}}, {1, {4}}});
}

inline BrauerGraph fg4() {
    return brauerkit::graph_from_orders({{1, {1, 3}}, {1, {1, 2, 3}}, {1, {2}}});
}

inline BrauerGraph fg4_flipped() {
    return brauerkit::graph_from_orders({{1, {3}}, {1, {2, 3, 1}}, {1, {2, 1}}});
}

// Trivial single-edge graph with plain endpoints.
inline BrauerGraph trivial_graph() {
    return brauerkit::graph_from_orders({{1, {1}}, {1, {1}}});
}

}  // namespace fixtures
