#pragma once

#include "brauerkit/brauer_graph.hpp"

namespace brauerkit {

// Flip of a Brauer graph at an edge: detach the edge's movable half-edges and
// re-attach each one right after the partner of its clockwise successor.
// Covers the seven local cases; multiplicities never change.
BrauerGraph flip_right(const BrauerGraph& g, int edge);

// mu_i^- = op . mu_i^+ . op
BrauerGraph flip_left(const BrauerGraph& g, int edge);

}  // namespace brauerkit
