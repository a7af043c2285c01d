#include "brauerkit/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace brauerkit {

using ordered_json = nlohmann::ordered_json;

SBQuiver sb_quiver_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    SBQuiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<int>());
    std::sort(q.vertices.begin(), q.vertices.end());
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows"))
            q.arrows.push_back({a.at("id").get<int>(), a.at("tail").get<int>(),
                                a.at("head").get<int>()});
    std::sort(q.arrows.begin(), q.arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    if (j.contains("cycles"))
        for (const auto& c : j.at("cycles")) {
            Cycle cy;
            cy.mult = c.at("mult").get<int>();
            for (const auto& a : c.at("arrows")) cy.arrows.push_back(a.get<int>());
            q.cycles.push_back(std::move(cy));
        }
    q.trivial = j.value("trivial", false) ||
                (q.arrows.empty() && q.cycles.empty() && q.vertices.size() == 1);
    return q;
}

BrauerGraph brauer_graph_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    std::vector<BrauerVertex> vs;
    std::vector<BrauerEdge> es;
    for (const auto& v : j.at("vertices")) {
        BrauerVertex bv;
        bv.id = v.at("id").get<int>();
        bv.mult = v.at("mult").get<int>();
        for (const auto& h : v.at("order")) bv.order.push_back(h.get<int>());
        vs.push_back(std::move(bv));
    }
    for (const auto& e : j.at("edges")) {
        BrauerEdge be;
        be.id = e.at("id").get<int>();
        be.half_edges[0] = e.at("half_edges").at(0).get<int>();
        be.half_edges[1] = e.at("half_edges").at(1).get<int>();
        es.push_back(be);
    }
    return make_brauer_graph(std::move(vs), std::move(es));
}

std::string to_json(const SBQuiver& q, int indent) {
    ordered_json j;
    j["vertices"] = q.vertices;
    j["arrows"] = ordered_json::array();
    for (const Arrow& a : q.arrows)
        j["arrows"].push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
    j["cycles"] = ordered_json::array();
    for (const Cycle& c : q.cycles)
        j["cycles"].push_back({{"arrows", c.arrows}, {"mult", c.mult}});
    if (q.trivial) j["trivial"] = true;
    return j.dump(indent);
}

std::string to_json(const BrauerGraph& g, int indent) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const BrauerVertex& v : g.vertices)
        j["vertices"].push_back({{"id", v.id}, {"mult", v.mult}, {"order", v.order}});
    j["edges"] = ordered_json::array();
    for (const BrauerEdge& e : g.edges)
        j["edges"].push_back(
            {{"id", e.id}, {"half_edges", {e.half_edges[0], e.half_edges[1]}}});
    return j.dump(indent);
}

std::string to_json(const Matrix& m, int indent) {
    ordered_json j = ordered_json::array();
    for (const auto& row : m) j.push_back(row);
    return j.dump(indent);
}

std::string to_json(const Fingerprint& f, int indent) {
    ordered_json j;
    j["edges"] = f.edge_count;
    j["multiplicities"] = f.multiplicity_multiset;
    j["cartan_invariant_factors"] = f.cartan_invariant_factors;
    return j.dump(indent);
}

std::string to_json(const std::vector<ReductionStep>& log, int indent) {
    ordered_json j = ordered_json::array();
    for (const ReductionStep& s : log)
        j.push_back({{"step", s.step},
                     {"vertex", s.vertex},
                     {"case-tag", s.case_tag},
                     {"tracked-cycle", s.tracked_cycle}});
    return j.dump(indent);
}

std::string to_json(const std::vector<FlipStep>& steps, int indent) {
    ordered_json j = ordered_json::array();
    for (const FlipStep& s : steps)
        j.push_back({{"edge", s.edge}, {"dir", s.left ? "left" : "right"}});
    return j.dump(indent);
}

bool looks_like_sb_quiver(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    return j.contains("arrows") || j.contains("cycles") || j.value("trivial", false);
}

std::string to_dot(const SBQuiver& q) {
    std::ostringstream os;
    os << "digraph sbquiver {\n";
    for (int v : q.vertices) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const Arrow& a : q.arrows) {
        int c = q.cycle_of(a.id);
        os << "  v" << a.tail << " -> v" << a.head << " [label=\"" << a.id;
        if (c >= 0) os << " (c" << c << ",m=" << q.cycles[c].mult << ")";
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const BrauerGraph& g) {
    std::ostringstream os;
    os << "graph brauer {\n";
    for (const BrauerVertex& v : g.vertices) {
        os << "  n" << v.id << " [label=\"m=" << v.mult << "\"];\n";
        os << "  // cyclic order at n" << v.id << ":";
        for (int h : v.order) os << " " << g.edge_of_half_edge(h);
        os << "\n";
    }
    for (const BrauerEdge& e : g.edges) {
        auto [v1, p1] = g.locate_half_edge(e.half_edges[0]);
        auto [v2, p2] = g.locate_half_edge(e.half_edges[1]);
        os << "  n" << g.vertices[v1].id << " -- n" << g.vertices[v2].id << " [label=\""
           << e.id << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace brauerkit
