#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

using Matrix = std::vector<std::vector<long long>>;

// Maximal walk attached to one visit of a vertex: the owning cycle traversed
// mult times starting at that visit.
struct Walk {
    int start_vertex = 0;
    int cycle = 0;               // index into q.cycles
    std::vector<int> arrows;     // length mult * cycle length
};

// Monomial basis of the algebra of an SB quiver: per vertex the idempotent,
// all proper prefixes of its maximal walks and a single socle element (the
// two full walks of a twice-visited vertex are identified).
struct PathBasis {
    std::vector<int> vertices;                 // same order as q.vertices
    std::map<int, std::vector<Walk>> walks;    // ordered by (cycle, position)

    int dim(int vertex) const;                 // dim e_v A
    long long total_dim() const;

    // Arrow string of a basis path: walk index within walks(vertex) and a
    // prefix length 1..len-1; the idempotent and the socle are separate.
    int end_of_prefix(const SBQuiver& q, int vertex, int walk, int length) const;
};

PathBasis path_basis(const SBQuiver& q);

// Entry (i, j) = number of basis elements of e_i A ending at j.
Matrix cartan_matrix(const SBQuiver& q);

// Quotient module e_i A / e_i A (1 - e_i) A together with the tops of its
// first syzygy.
struct CombinatorialModule {
    int vertex = 0;
    long long dim = 0;                  // dim of the quotient module
    std::vector<int> omega_top;         // ending vertices of the minimal
                                        // generators of the kernel, sorted
};

CombinatorialModule local_module(const SBQuiver& q, int vertex);

// Independent brute-force check: enumerate all paths up to max_len, span the
// two-sided relation ideal inside each (i, j) bucket and eliminate over exact
// rationals. Throws if the dimensions have not stabilized at max_len.
Matrix oracle_quotient(const SBQuiver& q, int max_len);

// Convenience: a safe default bound for oracle_quotient.
int oracle_default_bound(const SBQuiver& q);

}  // namespace brauerkit
