#pragma once

#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

// Brauer quiver of a Brauer graph: quiver vertices are the edges of g, one
// arrow per consecutive half-edge pair at every vertex of order >= 2 and a
// loop per exceptional end vertex. Cycles follow the cyclic orders with the
// vertex multiplicities. Throws on the trivial single-edge graph.
SBQuiver brauer_quiver(const BrauerGraph& g);

// Inverse construction: graph vertices are the cycles plus one fresh
// multiplicity-1 end vertex for every quiver vertex visited only once.
BrauerGraph brauer_graph_of(const SBQuiver& q);

}  // namespace brauerkit
