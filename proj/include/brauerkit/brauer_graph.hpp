#pragma once

#include <string>
#include <vector>

namespace brauerkit {

// Vertex of a Brauer graph: a multiplicity and the clockwise cyclic order of
// the incident half-edges.
struct BrauerVertex {
    int id = 0;
    int mult = 1;
    std::vector<int> order;  // half-edge ids, cyclically ordered

    bool operator==(const BrauerVertex&) const = default;
};

// Edge owning exactly two half-edges.
struct BrauerEdge {
    int id = 0;
    int half_edges[2] = {0, 0};

    bool operator==(const BrauerEdge&) const = default;
};

// Ribbon graph with per-vertex multiplicities.
struct BrauerGraph {
    std::vector<BrauerVertex> vertices;  // sorted by id
    std::vector<BrauerEdge> edges;       // sorted by id

    bool has_edge(int id) const;
    const BrauerEdge& edge(int id) const;
    const BrauerVertex& vertex(int id) const;

    // Vertex/position holding a given half-edge; returns {vertex index, slot}.
    std::pair<int, int> locate_half_edge(int half_edge) const;
    // Edge owning a given half-edge.
    int edge_of_half_edge(int half_edge) const;
    int partner(int half_edge) const;

    // Single edge whose both endpoints have multiplicity 1.
    bool is_trivial() const;

    bool operator==(const BrauerGraph&) const = default;
};

BrauerGraph make_brauer_graph(std::vector<BrauerVertex> vertices,
                              std::vector<BrauerEdge> edges);

// Convenience builder: vertices given as (mult, list of edge ids in cyclic
// order); every edge id must occur exactly twice in total. Half-edge ids are
// assigned deterministically (2*e, 2*e+1 in reading order).
BrauerGraph graph_from_orders(
    const std::vector<std::pair<int, std::vector<int>>>& vertex_orders);

std::vector<std::string> validate(const BrauerGraph& g);
bool is_valid(const BrauerGraph& g);

// Reverse every cyclic order; multiplicities unchanged.
BrauerGraph opposite(const BrauerGraph& g);

}  // namespace brauerkit
