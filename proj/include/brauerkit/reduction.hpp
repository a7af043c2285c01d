#pragma once

#include <string>
#include <vector>

#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

// One reduction step: a right mutation plus where the tracked cycle went.
struct ReductionStep {
    int step = 0;
    int vertex = 0;
    std::string case_tag;
    int tracked_cycle = -1;  // index of the tracked cycle after the step
};

struct ReductionOutcome {
    SBQuiver quiver;
    std::vector<ReductionStep> log;
    int tracked_cycle = -1;
};

// (R1): one mutation pulling a vertex outside the tracked cycle onto it.
// Throws when every vertex already lies on the tracked cycle.
ReductionOutcome apply_r1(const SBQuiver& q, int c0_index);

// (R2): the full mutation sequence dissolving the non-loop cycle `c_index`
// while the tracked cycle keeps covering every vertex.
ReductionOutcome apply_r2(const SBQuiver& q, int c0_index, int c_index);

// (R3): up to two mutations sliding the loop at `vertex` out of the way and
// shortcutting the tracked cycle past it.
ReductionOutcome apply_r3(const SBQuiver& q, int c0_index, int vertex);

// Full reduction to double-star normal form. budget < 0 picks the default
// 50 * arrows^2 bound; exceeding it throws.
ReductionOutcome to_double_star(const SBQuiver& q, long long budget = -1);

// (is double-star, multiplicity condition holds). The second flag is false
// whenever the first is.
std::pair<bool, bool> is_double_star(const BrauerGraph& g);

}  // namespace brauerkit
