#pragma once

#include <string>
#include <vector>

namespace brauerkit {

// Arrow of a quiver. Parallel arrows are distinguished by id only.
struct Arrow {
    int id = 0;
    int tail = 0;
    int head = 0;

    bool is_loop() const { return tail == head; }
    bool operator==(const Arrow&) const = default;
};

// Cycle of a cycle-decomposition: arrow ids in cyclic order plus a multiplicity.
struct Cycle {
    std::vector<int> arrows;
    int mult = 1;

    bool is_loop() const { return arrows.size() == 1; }
    bool operator==(const Cycle&) const = default;
};

// Special quiver together with a cycle-decomposition.
//
// The trivial object (one vertex, no arrows) corresponds to the single-edge
// Brauer graph with two plain endpoints; it is flagged rather than encoded
// through cycles.
struct SBQuiver {
    std::vector<int> vertices;   // sorted, unique
    std::vector<Arrow> arrows;   // sorted by id
    std::vector<Cycle> cycles;
    bool trivial = false;

    bool has_vertex(int v) const;
    bool has_arrow(int id) const;
    const Arrow& arrow(int id) const;

    // Index into `cycles` of the cycle containing arrow `id`, or -1.
    int cycle_of(int id) const;

    std::vector<int> out_arrows(int v) const;  // includes loops
    std::vector<int> in_arrows(int v) const;   // includes loops

    // Number of times vertex v is visited over all cycle traversals.
    int visit_count(int v) const;

    int max_arrow_id() const;

    bool operator==(const SBQuiver&) const = default;
};

SBQuiver make_sb_quiver(std::vector<int> vertices, std::vector<Arrow> arrows,
                        std::vector<Cycle> cycles);
SBQuiver make_trivial_sb_quiver(int vertex = 1);

// Validation report: empty iff all SB quiver invariants hold.
std::vector<std::string> validate(const SBQuiver& q);
bool is_valid(const SBQuiver& q);

// Successor of an arrow within its cycle. Throws on unknown arrow.
int next_arrow(const SBQuiver& q, int arrow_id);
// Predecessor of an arrow within its cycle.
int prev_arrow(const SBQuiver& q, int arrow_id);

// True iff there are arrows a: i->j and b: j->i, a != b, with b != na(a) and
// a != na(b).
bool is_multiplex(const SBQuiver& q, int vertex);

// Reverse all arrows and all cycles; multiplicities unchanged.
SBQuiver opposite(const SBQuiver& q);

}  // namespace brauerkit
