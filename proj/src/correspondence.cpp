#include "brauerkit/correspondence.hpp"

#include <map>
#include <stdexcept>

namespace brauerkit {

SBQuiver brauer_quiver(const BrauerGraph& g) {
    auto report = validate(g);
    if (!report.empty()) throw std::invalid_argument("invalid graph: " + report.front());
    if (g.is_trivial())
        throw std::invalid_argument("trivial graph: no arrows would result");

    std::vector<int> vertices;
    for (const BrauerEdge& e : g.edges) vertices.push_back(e.id);

    std::vector<Arrow> arrows;
    std::vector<Cycle> cycles;
    int next_id = 1;
    for (const BrauerVertex& v : g.vertices) {
        int len = static_cast<int>(v.order.size());
        if (len == 1) {
            if (v.mult > 1) {
                // Exceptional end vertex: loop in its own cycle.
                int e = g.edge_of_half_edge(v.order[0]);
                arrows.push_back({next_id, e, e});
                cycles.push_back({{next_id}, v.mult});
                ++next_id;
            }
            continue;
        }
        Cycle c;
        c.mult = v.mult;
        for (int t = 0; t < len; ++t) {
            int from = g.edge_of_half_edge(v.order[t]);
            int to = g.edge_of_half_edge(v.order[(t + 1) % len]);
            arrows.push_back({next_id, from, to});
            c.arrows.push_back(next_id);
            ++next_id;
        }
        cycles.push_back(std::move(c));
    }
    return make_sb_quiver(std::move(vertices), std::move(arrows), std::move(cycles));
}

BrauerGraph brauer_graph_of(const SBQuiver& q) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (q.trivial) {
        BrauerEdge e;
        e.id = q.vertices.front();
        e.half_edges[0] = 0;
        e.half_edges[1] = 1;
        return make_brauer_graph({{0, 1, {0}}, {1, 1, {1}}}, {e});
    }

    std::map<int, int> occurrences;  // quiver vertex -> half-edges used so far
    auto half = [&](int v) {
        int occ = occurrences[v]++;
        return 2 * v + occ;
    };

    std::vector<BrauerVertex> vs;
    int vid = 0;
    for (const Cycle& c : q.cycles) {
        BrauerVertex v;
        v.id = vid++;
        v.mult = c.mult;
        for (int a : c.arrows) v.order.push_back(half(q.arrow(a).tail));
        vs.push_back(std::move(v));
    }
    // One plain end vertex per quiver vertex visited only once.
    for (int u : q.vertices) {
        if (occurrences[u] == 1) {
            BrauerVertex v;
            v.id = vid++;
            v.mult = 1;
            v.order.push_back(half(u));
            vs.push_back(std::move(v));
        }
    }
    std::vector<BrauerEdge> es;
    for (int u : q.vertices) {
        BrauerEdge e;
        e.id = u;
        e.half_edges[0] = 2 * u;
        e.half_edges[1] = 2 * u + 1;
        es.push_back(e);
    }
    return make_brauer_graph(std::move(vs), std::move(es));
}

}  // namespace brauerkit
