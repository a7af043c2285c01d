#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauerkit/algebra.hpp"
#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/sb_quiver.hpp"

namespace brauerkit {

// Two-term tilting complex concentrated at one vertex: T_j = P_j for j not
// the pivot, T_pivot = (direct sum of P_v over degree0) -> P_pivot.
struct OkuyamaComplex {
    int pivot = 0;
    std::vector<int> degree0;  // projective indices, sorted multiset
};

OkuyamaComplex okuyama_complex(const SBQuiver& q, int pivot);

// Cartan matrix of the mutated algebra predicted through alternating sums of
// Hom spaces between the summands of the Okuyama-Rickard complex.
Matrix euler_cartan(const SBQuiver& q, int pivot);

// Ext^1 dimensions between the simple modules of the mutated algebra,
// evaluated from the local case tables; equals the arrow-count matrix of the
// mutated quiver.
Matrix ext_table(const SBQuiver& q, int pivot);

// Derived-invariant record.
struct Fingerprint {
    long long edge_count = 0;
    std::vector<int> multiplicity_multiset;            // weakly decreasing
    std::vector<long long> cartan_invariant_factors;   // divisibility order, zeros last

    bool operator==(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const SBQuiver& q);
Fingerprint fingerprint(const BrauerGraph& g);

// Smith normal form diagonal of an integer matrix (non-negative, divisibility
// order, zeros last).
std::vector<long long> smith_invariant_factors(Matrix m);

struct FlipStep {
    int edge = 0;
    bool left = false;
};

// Breadth-first search for a flip sequence connecting two graphs up to
// isomorphism. Returns std::nullopt when fingerprints differ or the budget is
// exhausted without a match.
struct FlipSearchResult {
    bool found = false;
    bool fingerprint_mismatch = false;
    bool budget_exhausted = false;
    std::vector<FlipStep> steps;
};

FlipSearchResult flip_search(const BrauerGraph& g1, const BrauerGraph& g2, int max_depth,
                             std::size_t max_states = 200000);

}  // namespace brauerkit
