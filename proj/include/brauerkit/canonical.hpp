#pragma once

#include <string>

#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

// Canonical byte encoding: equal encodings iff the inputs are isomorphic
// (orientation-preserving; vertex/arrow resp. vertex/edge/half-edge
// relabelings, cyclic orders and multiplicities preserved).
//
// Both structures are canonicalized through the same ribbon-walk scheme:
// slots with a `next` permutation (rings = cycles resp. vertex orders), a
// partial `partner` involution (shared quiver vertices resp. edge pairing)
// and a multiplicity per ring. The encoding is the lexicographically minimal
// breadth-first relabeling over all start slots.
std::string canonical_form(const SBQuiver& q);
std::string canonical_form(const BrauerGraph& g);

bool isomorphic(const SBQuiver& a, const SBQuiver& b);
bool isomorphic(const BrauerGraph& a, const BrauerGraph& b);

// Structure-preserving relabel to contiguous ids (deterministic, not
// canonical). Useful before serializing.
SBQuiver renumbered(const SBQuiver& q);
BrauerGraph renumbered(const BrauerGraph& g);

}  // namespace brauerkit
