#include "brauerkit/brauer_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace brauerkit {

bool BrauerGraph::has_edge(int id) const {
    for (const BrauerEdge& e : edges)
        if (e.id == id) return true;
    return false;
}

const BrauerEdge& BrauerGraph::edge(int id) const {
    for (const BrauerEdge& e : edges)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

const BrauerVertex& BrauerGraph::vertex(int id) const {
    for (const BrauerVertex& v : vertices)
        if (v.id == id) return v;
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
}

std::pair<int, int> BrauerGraph::locate_half_edge(int half_edge) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t s = 0; s < vertices[i].order.size(); ++s)
            if (vertices[i].order[s] == half_edge)
                return {static_cast<int>(i), static_cast<int>(s)};
    throw std::invalid_argument("unattached half-edge " + std::to_string(half_edge));
}

int BrauerGraph::edge_of_half_edge(int half_edge) const {
    for (const BrauerEdge& e : edges)
        if (e.half_edges[0] == half_edge || e.half_edges[1] == half_edge) return e.id;
    throw std::invalid_argument("unknown half-edge " + std::to_string(half_edge));
}

int BrauerGraph::partner(int half_edge) const {
    for (const BrauerEdge& e : edges) {
        if (e.half_edges[0] == half_edge) return e.half_edges[1];
        if (e.half_edges[1] == half_edge) return e.half_edges[0];
    }
    throw std::invalid_argument("unknown half-edge " + std::to_string(half_edge));
}

bool BrauerGraph::is_trivial() const {
    if (edges.size() != 1 || vertices.size() != 2) return false;
    return vertices[0].mult == 1 && vertices[1].mult == 1;
}

BrauerGraph make_brauer_graph(std::vector<BrauerVertex> vertices,
                              std::vector<BrauerEdge> edges) {
    BrauerGraph g;
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    std::sort(g.vertices.begin(), g.vertices.end(),
              [](const BrauerVertex& a, const BrauerVertex& b) { return a.id < b.id; });
    std::sort(g.edges.begin(), g.edges.end(),
              [](const BrauerEdge& a, const BrauerEdge& b) { return a.id < b.id; });
    return g;
}

BrauerGraph graph_from_orders(
    const std::vector<std::pair<int, std::vector<int>>>& vertex_orders) {
    std::map<int, int> seen;  // edge id -> occurrences so far
    std::vector<BrauerVertex> vs;
    std::vector<BrauerEdge> es;
    int vid = 0;
    for (const auto& [mult, edge_ids] : vertex_orders) {
        BrauerVertex v;
        v.id = vid++;
        v.mult = mult;
        for (int e : edge_ids) {
            int occurrence = seen[e]++;
            if (occurrence > 1)
                throw std::invalid_argument("edge " + std::to_string(e) +
                                            " occurs more than twice");
            v.order.push_back(2 * e + occurrence);
        }
        vs.push_back(std::move(v));
    }
    for (const auto& [e, count] : seen) {
        if (count != 2)
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " occurs " + std::to_string(count) + " times");
        BrauerEdge edge;
        edge.id = e;
        edge.half_edges[0] = 2 * e;
        edge.half_edges[1] = 2 * e + 1;
        es.push_back(edge);
    }
    return make_brauer_graph(std::move(vs), std::move(es));
}

static bool graph_connected(const BrauerGraph& g) {
    if (g.vertices.empty()) return false;
    std::set<int> seen{g.vertices.front().id};
    std::vector<int> stack{g.vertices.front().id};
    auto vertex_of_half = [&](int h) -> int {
        for (const BrauerVertex& v : g.vertices)
            for (int x : v.order)
                if (x == h) return v.id;
        return -1;
    };
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : g.vertex(v).order) {
            int other = vertex_of_half(g.partner(h));
            if (other >= 0 && !seen.count(other)) {
                seen.insert(other);
                stack.push_back(other);
            }
        }
    }
    return seen.size() == g.vertices.size();
}

std::vector<std::string> validate(const BrauerGraph& g) {
    std::vector<std::string> report;
    auto bad = [&](const std::string& msg) { report.push_back(msg); };

    if (g.vertices.empty() || g.edges.empty()) {
        bad("graph needs at least one vertex and one edge");
        return report;
    }

    std::map<int, int> attach_count;
    std::set<int> vertex_ids, edge_ids;
    for (const BrauerVertex& v : g.vertices) {
        if (!vertex_ids.insert(v.id).second)
            bad("duplicate vertex id " + std::to_string(v.id));
        if (v.mult < 1) bad("vertex " + std::to_string(v.id) + " has multiplicity < 1");
        if (v.order.empty()) bad("vertex " + std::to_string(v.id) + " has no half-edges");
        for (int h : v.order) ++attach_count[h];
    }
    std::set<int> declared;
    for (const BrauerEdge& e : g.edges) {
        if (!edge_ids.insert(e.id).second) bad("duplicate edge id " + std::to_string(e.id));
        if (e.half_edges[0] == e.half_edges[1])
            bad("edge " + std::to_string(e.id) + " reuses a half-edge");
        for (int h : e.half_edges) {
            if (!declared.insert(h).second)
                bad("half-edge " + std::to_string(h) + " owned by two edges");
            auto it = attach_count.find(h);
            if (it == attach_count.end())
                bad("half-edge " + std::to_string(h) + " is unattached");
            else if (it->second != 1)
                bad("half-edge " + std::to_string(h) + " attached " +
                    std::to_string(it->second) + " times");
        }
    }
    for (const auto& [h, n] : attach_count)
        if (!declared.count(h)) bad("half-edge " + std::to_string(h) + " belongs to no edge");

    if (!report.empty()) return report;
    if (!graph_connected(g)) bad("graph is not connected");
    return report;
}

bool is_valid(const BrauerGraph& g) { return validate(g).empty(); }

BrauerGraph opposite(const BrauerGraph& g) {
    BrauerGraph r = g;
    for (BrauerVertex& v : r.vertices) std::reverse(v.order.begin(), v.order.end());
    return r;
}

}  // namespace brauerkit
