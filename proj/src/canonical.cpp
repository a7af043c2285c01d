#include "brauerkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace brauerkit {
namespace {

// Shared ribbon view: slots with a `next` permutation whose orbits are the
// rings (cycles resp. vertex orders), a partial `partner` involution and a
// multiplicity attached to each slot's ring.
struct Ribbon {
    std::vector<int> next;
    std::vector<int> partner;  // -1 when the slot has no partner (leaf side)
    std::vector<int> mult;
};

Ribbon ribbon_of(const SBQuiver& q) {
    Ribbon r;
    std::vector<const Cycle*> cycles;
    std::vector<int> start;  // slot index of each cycle's position 0
    int n = 0;
    for (const Cycle& c : q.cycles) {
        cycles.push_back(&c);
        start.push_back(n);
        n += static_cast<int>(c.arrows.size());
    }
    r.next.resize(n);
    r.partner.assign(n, -1);
    r.mult.resize(n);
    std::map<int, std::vector<int>> visits;  // quiver vertex -> slots
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        int len = static_cast<int>(cycles[ci]->arrows.size());
        for (int t = 0; t < len; ++t) {
            int s = start[ci] + t;
            r.next[s] = start[ci] + (t + 1) % len;
            r.mult[s] = cycles[ci]->mult;
            visits[q.arrow(cycles[ci]->arrows[t]).tail].push_back(s);
        }
    }
    for (const auto& [v, slots] : visits) {
        if (slots.size() == 2) {
            r.partner[slots[0]] = slots[1];
            r.partner[slots[1]] = slots[0];
        } else if (slots.size() > 2) {
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " visited more than twice");
        }
    }
    return r;
}

Ribbon ribbon_of(const BrauerGraph& g) {
    Ribbon r;
    std::map<int, int> slot_of_half;
    int n = 0;
    for (const BrauerVertex& v : g.vertices) n += static_cast<int>(v.order.size());
    r.next.resize(n);
    r.partner.assign(n, -1);
    r.mult.resize(n);
    int s = 0;
    for (const BrauerVertex& v : g.vertices) {
        int len = static_cast<int>(v.order.size());
        for (int t = 0; t < len; ++t) {
            slot_of_half[v.order[t]] = s + t;
            r.next[s + t] = s + (t + 1) % len;
            r.mult[s + t] = v.mult;
        }
        s += len;
    }
    for (const BrauerEdge& e : g.edges) {
        int a = slot_of_half.at(e.half_edges[0]);
        int b = slot_of_half.at(e.half_edges[1]);
        r.partner[a] = b;
        r.partner[b] = a;
    }
    return r;
}

// Breadth-first relabeling from a root; complete invariant together with
// minimization over roots.
std::vector<int> walk_code(const Ribbon& r, int root) {
    int n = static_cast<int>(r.next.size());
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    for (size_t k = 0; k < order.size(); ++k) {
        int s = order[k];
        for (int nb : {r.next[s], r.partner[s]}) {
            if (nb >= 0 && label[nb] < 0) {
                label[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("structure is not connected");
    std::vector<int> code;
    code.reserve(3 * n);
    for (int s : order) {
        code.push_back(label[r.next[s]]);
        code.push_back(r.partner[s] < 0 ? -1 : label[r.partner[s]]);
        code.push_back(r.mult[s]);
    }
    return code;
}

std::string encode(const Ribbon& r) {
    int n = static_cast<int>(r.next.size());
    std::vector<int> best;
    for (int root = 0; root < n; ++root) {
        std::vector<int> code = walk_code(r, root);
        if (best.empty() || code < best) best = std::move(code);
    }
    std::string out = std::to_string(n);
    for (int x : best) {
        out.push_back(',');
        out += std::to_string(x);
    }
    return out;
}

}  // namespace

std::string canonical_form(const SBQuiver& q) {
    if (q.trivial) return "trivial";
    return "sb:" + encode(ribbon_of(q));
}

std::string canonical_form(const BrauerGraph& g) {
    return "bg:" + encode(ribbon_of(g));
}

bool isomorphic(const SBQuiver& a, const SBQuiver& b) {
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic(const BrauerGraph& a, const BrauerGraph& b) {
    return canonical_form(a) == canonical_form(b);
}

SBQuiver renumbered(const SBQuiver& q) {
    SBQuiver r = q;
    std::map<int, int> vmap, amap;
    for (size_t i = 0; i < r.vertices.size(); ++i) vmap[r.vertices[i]] = static_cast<int>(i + 1);
    for (size_t i = 0; i < r.arrows.size(); ++i) amap[r.arrows[i].id] = static_cast<int>(i + 1);
    for (int& v : r.vertices) v = vmap.at(v);
    for (Arrow& a : r.arrows) {
        a.id = amap.at(a.id);
        a.tail = vmap.at(a.tail);
        a.head = vmap.at(a.head);
    }
    for (Cycle& c : r.cycles)
        for (int& a : c.arrows) a = amap.at(a);
    return r;
}

BrauerGraph renumbered(const BrauerGraph& g) {
    BrauerGraph r = g;
    std::map<int, int> vmap, emap, hmap;
    for (size_t i = 0; i < r.vertices.size(); ++i) vmap[r.vertices[i].id] = static_cast<int>(i + 1);
    for (size_t i = 0; i < r.edges.size(); ++i) {
        int e = r.edges[i].id;
        emap[e] = static_cast<int>(i + 1);
        hmap[r.edges[i].half_edges[0]] = 2 * static_cast<int>(i + 1);
        hmap[r.edges[i].half_edges[1]] = 2 * static_cast<int>(i + 1) + 1;
    }
    for (BrauerVertex& v : r.vertices) {
        v.id = vmap.at(v.id);
        for (int& h : v.order) h = hmap.at(h);
    }
    for (BrauerEdge& e : r.edges) {
        e.half_edges[0] = hmap.at(e.half_edges[0]);
        e.half_edges[1] = hmap.at(e.half_edges[1]);
        e.id = emap.at(e.id);
    }
    return r;
}

}  // namespace brauerkit
