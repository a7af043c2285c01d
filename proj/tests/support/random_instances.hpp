#pragma once

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brauerkit/brauer_graph.hpp"
#include "brauerkit/canonical.hpp"
#include "brauerkit/correspondence.hpp"
#include "brauerkit/sb_quiver.hpp"

// Generators and enumerators for small instances. A ribbon graph on E edges
// is a permutation of the 2E half-edges (its orbits are the cyclic vertex
// orders) together with the fixed pairing (2e, 2e+1).
namespace testsupport {

inline brauerkit::BrauerGraph graph_from_permutation(const std::vector<int>& next,
                                                     const std::vector<int>& mults) {
    int n = static_cast<int>(next.size());
    std::vector<brauerkit::BrauerVertex> vs;
    std::vector<bool> seen(n, false);
    int vid = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        brauerkit::BrauerVertex v;
        v.id = vid;
        v.mult = mults.at(vid);
        for (int h = s; !seen[h]; h = next[h]) {
            seen[h] = true;
            v.order.push_back(h);
        }
        vs.push_back(std::move(v));
        ++vid;
    }
    std::vector<brauerkit::BrauerEdge> es;
    for (int e = 0; e * 2 < n; ++e) es.push_back({e + 1, {2 * e, 2 * e + 1}});
    return brauerkit::make_brauer_graph(std::move(vs), std::move(es));
}

inline int vertex_count_of_permutation(const std::vector<int>& next) {
    int n = static_cast<int>(next.size());
    std::vector<bool> seen(n, false);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        for (int h = s; !seen[h]; h = next[h]) seen[h] = true;
    }
    return count;
}

inline bool permutation_connected(const std::vector<int>& next) {
    int n = static_cast<int>(next.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int nb : {next[h], h ^ 1}) {
            if (!seen[nb]) {
                seen[nb] = true;
                ++reached;
                stack.push_back(nb);
            }
        }
    }
    return reached == n;
}

// Uniform-ish random connected Brauer graph with <= max_edges edges and
// multiplicities in 1..max_mult.
inline brauerkit::BrauerGraph random_graph(std::mt19937& rng, int max_edges, int max_mult) {
    std::uniform_int_distribution<int> edge_count(1, max_edges);
    while (true) {
        int e = edge_count(rng);
        std::vector<int> next(2 * e);
        std::iota(next.begin(), next.end(), 0);
        std::shuffle(next.begin(), next.end(), rng);
        if (!permutation_connected(next)) continue;
        int v = vertex_count_of_permutation(next);
        std::vector<int> mults(v);
        std::uniform_int_distribution<int> mult(1, max_mult);
        for (int& m : mults) m = mult(rng);
        return graph_from_permutation(next, mults);
    }
}

inline brauerkit::SBQuiver random_sb_quiver(std::mt19937& rng, int max_vertices,
                                            int max_mult) {
    while (true) {
        brauerkit::BrauerGraph g = random_graph(rng, max_vertices, max_mult);
        if (g.is_trivial()) continue;
        return brauerkit::brauer_quiver(g);
    }
}

// All connected shapes with exactly `edges` edges up to isomorphism, found by
// brute force over the half-edge successor permutation. Only viable for very
// small edge counts; kept as a cross-check for the grow-by-one enumerator.
inline std::vector<brauerkit::BrauerGraph> enumerate_shapes_bruteforce(int edges) {
    int n = 2 * edges;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::string> seen;
    std::vector<brauerkit::BrauerGraph> shapes;
    do {
        if (!permutation_connected(perm)) continue;
        int v = vertex_count_of_permutation(perm);
        brauerkit::BrauerGraph g = graph_from_permutation(perm, std::vector<int>(v, 1));
        std::string key = brauerkit::canonical_form(g);
        if (seen.insert(key).second) shapes.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return shapes;
}

// Connected shapes up to isomorphism, built by inserting one edge at a time.
// Every connected ribbon graph has an edge whose removal keeps it connected
// (a non-bridge, or a pendant edge of a tree), so growing from the two
// one-edge shapes reaches everything.
inline std::vector<brauerkit::BrauerGraph> enumerate_shapes(int edges) {
    using brauerkit::BrauerGraph;
    std::vector<BrauerGraph> current = {
        brauerkit::graph_from_orders({{1, {1}}, {1, {1}}}),
        brauerkit::graph_from_orders({{1, {1, 1}}})};
    for (int e = 2; e <= edges; ++e) {
        std::set<std::string> seen;
        std::vector<BrauerGraph> next;
        for (const BrauerGraph& base : current) {
            int h1 = 2 * e, h2 = 2 * e + 1;
            // Insertion points: after any half-edge of any vertex, or a fresh
            // end vertex (for at most one of the two halves).
            struct Spot {
                int vertex;  // -1 = fresh vertex
                int after;   // slot index
            };
            std::vector<Spot> spots{{-1, 0}};
            for (size_t vi = 0; vi < base.vertices.size(); ++vi)
                for (size_t s = 0; s < base.vertices[vi].order.size(); ++s)
                    spots.push_back({static_cast<int>(vi), static_cast<int>(s)});
            for (const Spot& s1 : spots) {
                BrauerGraph g1 = base;
                if (s1.vertex < 0) {
                    brauerkit::BrauerVertex v;
                    v.id = 1000 + e;
                    v.mult = 1;
                    v.order = {h1};
                    g1.vertices.push_back(v);
                } else {
                    auto& ord = g1.vertices[s1.vertex].order;
                    ord.insert(ord.begin() + s1.after + 1, h1);
                }
                // Second half: fresh only if the first went to an existing
                // vertex; otherwise the edge would be disconnected.
                std::vector<Spot> spots2;
                if (s1.vertex >= 0) spots2.push_back({-1, 0});
                for (size_t vi = 0; vi < g1.vertices.size(); ++vi) {
                    if (s1.vertex < 0 && vi + 1 == g1.vertices.size()) continue;
                    for (size_t s = 0; s < g1.vertices[vi].order.size(); ++s)
                        spots2.push_back({static_cast<int>(vi), static_cast<int>(s)});
                }
                for (const Spot& s2 : spots2) {
                    BrauerGraph g2 = g1;
                    if (s2.vertex < 0) {
                        brauerkit::BrauerVertex v;
                        v.id = 2000 + e;
                        v.mult = 1;
                        v.order = {h2};
                        g2.vertices.push_back(v);
                    } else {
                        auto& ord = g2.vertices[s2.vertex].order;
                        ord.insert(ord.begin() + s2.after + 1, h2);
                    }
                    g2.edges.push_back({e, {h1, h2}});
                    std::sort(g2.edges.begin(), g2.edges.end(),
                              [](const brauerkit::BrauerEdge& a,
                                 const brauerkit::BrauerEdge& b) { return a.id < b.id; });
                    if (!brauerkit::is_valid(g2)) continue;
                    if (seen.insert(brauerkit::canonical_form(g2)).second)
                        next.push_back(brauerkit::renumbered(g2));
                }
            }
        }
        current = std::move(next);
    }
    if (edges == 1) return current;
    return current;
}

// All connected Brauer graphs with exactly `edges` edges up to isomorphism,
// multiplicities in 1..max_mult (trivial single-edge graph included).
inline std::vector<brauerkit::BrauerGraph> enumerate_graphs(int edges, int max_mult) {
    std::vector<brauerkit::BrauerGraph> out;
    std::set<std::string> seen_with_mults;
    for (const brauerkit::BrauerGraph& shape : enumerate_shapes(edges)) {
        int v = static_cast<int>(shape.vertices.size());
        std::vector<int> mults(v, 1);
        while (true) {
            brauerkit::BrauerGraph g = shape;
            for (int i = 0; i < v; ++i) g.vertices[i].mult = mults[i];
            if (seen_with_mults.insert(brauerkit::canonical_form(g)).second)
                out.push_back(std::move(g));
            int pos = v - 1;
            while (pos >= 0 && mults[pos] == max_mult) mults[pos--] = 1;
            if (pos < 0) break;
            ++mults[pos];
        }
    }
    return out;
}

inline std::vector<brauerkit::BrauerGraph> enumerate_graphs_up_to(int max_edges,
                                                                  int max_mult) {
    std::vector<brauerkit::BrauerGraph> out;
    for (int e = 1; e <= max_edges; ++e) {
        auto batch = enumerate_graphs(e, max_mult);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

// Underlying graph is a tree (counting every vertex, leaves included).
inline bool is_tree_graph(const brauerkit::BrauerGraph& g) {
    return g.vertices.size() == g.edges.size() + 1;
}

}  // namespace testsupport
