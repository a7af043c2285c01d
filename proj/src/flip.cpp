#include "brauerkit/flip.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauerkit {

namespace {

int position_of(const std::vector<int>& order, int half) {
    auto it = std::find(order.begin(), order.end(), half);
    if (it == order.end()) throw std::logic_error("half-edge not at expected vertex");
    return static_cast<int>(it - order.begin());
}

void erase_value(std::vector<int>& order, int half) {
    order.erase(order.begin() + position_of(order, half));
}

void insert_after(std::vector<int>& order, int anchor, const std::vector<int>& halves) {
    int p = position_of(order, anchor);
    order.insert(order.begin() + p + 1, halves.begin(), halves.end());
}

}  // namespace

BrauerGraph flip_right(const BrauerGraph& g, int edge) {
    auto report = validate(g);
    if (!report.empty()) throw std::invalid_argument("invalid graph: " + report.front());
    if (g.is_trivial()) throw std::invalid_argument("cannot flip the trivial graph");
    if (!g.has_edge(edge)) throw std::invalid_argument("unknown edge");

    BrauerGraph out = g;
    const BrauerEdge& e = g.edge(edge);
    int f1 = e.half_edges[0];
    int f2 = e.half_edges[1];
    auto [v1, p1] = g.locate_half_edge(f1);
    auto [v2, p2] = g.locate_half_edge(f2);

    auto is_own_half = [&](int h) { return h == f1 || h == f2; };
    // Clockwise successor skipping the flipped edge's own half-edges.
    auto successor = [&](int vi, int from_pos) -> int {
        const auto& order = g.vertices[vi].order;
        int len = static_cast<int>(order.size());
        for (int k = 1; k <= len; ++k) {
            int h = order[(from_pos + k) % len];
            if (!is_own_half(h)) return h;
        }
        return -1;
    };

    if (v1 == v2) {
        // Both half-edges at one vertex: cases (v)-(vii).
        auto& order = out.vertices[v1].order;
        if (successor(v1, p1) < 0) return out;  // lone loop vertex, nothing to move
        int len = static_cast<int>(g.vertices[v1].order.size());
        bool adjacent12 = g.vertices[v1].order[(p1 + 1) % len] == f2;
        bool adjacent21 = g.vertices[v1].order[(p2 + 1) % len] == f1;
        if (adjacent12 || adjacent21) {
            // The half-edges travel as an ordered pair, case (vii).
            int lead = adjacent12 ? f1 : f2;
            int trail = adjacent12 ? f2 : f1;
            int s = successor(v1, adjacent12 ? p2 : p1);
            int anchor = g.partner(s);
            erase_value(order, f1);
            erase_value(order, f2);
            auto [vi, sp] = g.locate_half_edge(anchor);
            insert_after(out.vertices[vi].order, anchor, {lead, trail});
            return out;
        }
        // Cases (v)/(vi): independent targets.
        int a1 = g.partner(successor(v1, p1));
        int a2 = g.partner(successor(v1, p2));
        erase_value(order, f1);
        erase_value(order, f2);
        insert_after(out.vertices[g.locate_half_edge(a1).first].order, a1, {f1});
        insert_after(out.vertices[g.locate_half_edge(a2).first].order, a2, {f2});
        return out;
    }

    // Distinct endpoints: cases (i)-(iv); a half-edge alone at its vertex
    // (the edge is external there) stays put.
    struct Move {
        int half;
        int anchor;
    };
    std::vector<Move> moves;
    if (g.vertices[v1].order.size() >= 2) moves.push_back({f1, g.partner(successor(v1, p1))});
    if (g.vertices[v2].order.size() >= 2) moves.push_back({f2, g.partner(successor(v2, p2))});
    if (moves.empty()) return out;  // single edge between two plain/exceptional ends

    for (const Move& m : moves) {
        auto [vi, pos] = out.locate_half_edge(m.half);
        erase_value(out.vertices[vi].order, m.half);
    }
    for (const Move& m : moves) {
        auto [vi, pos] = out.locate_half_edge(m.anchor);
        insert_after(out.vertices[vi].order, m.anchor, {m.half});
    }
    return out;
}

BrauerGraph flip_left(const BrauerGraph& g, int edge) {
    return opposite(flip_right(opposite(g), edge));
}

}  // namespace brauerkit
