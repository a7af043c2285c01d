#pragma once

#include <string>

#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/derived.hpp"
#include "brauerkit/reduction.hpp"
#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

SBQuiver sb_quiver_from_json(const std::string& text);
BrauerGraph brauer_graph_from_json(const std::string& text);

std::string to_json(const SBQuiver& q, int indent = 2);
std::string to_json(const BrauerGraph& g, int indent = 2);
std::string to_json(const Matrix& m, int indent = 2);
std::string to_json(const Fingerprint& f, int indent = 2);
std::string to_json(const std::vector<ReductionStep>& log, int indent = 2);
std::string to_json(const std::vector<FlipStep>& steps, int indent = 2);

// True when the JSON object looks like an SB quiver (has "arrows"/"cycles").
bool looks_like_sb_quiver(const std::string& text);

std::string to_dot(const SBQuiver& q);
std::string to_dot(const BrauerGraph& g);

}  // namespace brauerkit
