#pragma once

#include <string>
#include <vector>

#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

// Right mutation with provenance: which input cycle each output cycle
// descends from (-1 for cycles created by the mutation) and the local rules
// that fired. Reduction drivers use the origin map to track a cycle across
// mutations.
struct MutationResult {
    SBQuiver quiver;
    std::vector<int> cycle_origin;
    std::vector<std::string> case_tags;
    bool identity = false;
};

MutationResult mutate_right_traced(const SBQuiver& q, int vertex);

SBQuiver mutate_right(const SBQuiver& q, int vertex);

// mu_i^- = op . mu_i^+ . op
SBQuiver mutate_left(const SBQuiver& q, int vertex);

}  // namespace brauerkit
