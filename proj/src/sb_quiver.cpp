#include "brauerkit/sb_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace brauerkit {

bool SBQuiver::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SBQuiver::has_arrow(int id) const {
    for (const Arrow& a : arrows)
        if (a.id == id) return true;
    return false;
}

const Arrow& SBQuiver::arrow(int id) const {
    for (const Arrow& a : arrows)
        if (a.id == id) return a;
    throw std::invalid_argument("unknown arrow id " + std::to_string(id));
}

int SBQuiver::cycle_of(int id) const {
    for (size_t c = 0; c < cycles.size(); ++c)
        for (int a : cycles[c].arrows)
            if (a == id) return static_cast<int>(c);
    return -1;
}

std::vector<int> SBQuiver::out_arrows(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows)
        if (a.tail == v) out.push_back(a.id);
    return out;
}

std::vector<int> SBQuiver::in_arrows(int v) const {
    std::vector<int> in;
    for (const Arrow& a : arrows)
        if (a.head == v) in.push_back(a.id);
    return in;
}

int SBQuiver::visit_count(int v) const {
    // Every traversal visit of v pairs an incoming with an outgoing arrow,
    // so visits coincide with the number of arrows departing v.
    int n = 0;
    for (const Arrow& a : arrows)
        if (a.tail == v) ++n;
    return n;
}

int SBQuiver::max_arrow_id() const {
    int m = 0;
    for (const Arrow& a : arrows) m = std::max(m, a.id);
    return m;
}

SBQuiver make_sb_quiver(std::vector<int> vertices, std::vector<Arrow> arrows,
                        std::vector<Cycle> cycles) {
    SBQuiver q;
    q.vertices = std::move(vertices);
    std::sort(q.vertices.begin(), q.vertices.end());
    q.vertices.erase(std::unique(q.vertices.begin(), q.vertices.end()), q.vertices.end());
    q.arrows = std::move(arrows);
    std::sort(q.arrows.begin(), q.arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    q.cycles = std::move(cycles);
    return q;
}

SBQuiver make_trivial_sb_quiver(int vertex) {
    SBQuiver q;
    q.vertices = {vertex};
    q.trivial = true;
    return q;
}

static bool quiver_connected(const SBQuiver& q) {
    if (q.vertices.empty()) return false;
    std::set<int> seen{q.vertices.front()};
    std::vector<int> stack{q.vertices.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows) {
            int other = -1;
            if (a.tail == v) other = a.head;
            else if (a.head == v) other = a.tail;
            if (other >= 0 && !seen.count(other)) {
                seen.insert(other);
                stack.push_back(other);
            }
        }
    }
    return seen.size() == q.vertices.size();
}

std::vector<std::string> validate(const SBQuiver& q) {
    std::vector<std::string> report;
    auto bad = [&](const std::string& msg) { report.push_back(msg); };

    if (q.vertices.empty()) {
        bad("quiver has no vertices");
        return report;
    }
    if (q.trivial) {
        if (!q.arrows.empty() || !q.cycles.empty() || q.vertices.size() != 1)
            bad("trivial quiver must have one vertex and no arrows or cycles");
        return report;
    }
    if (q.arrows.empty()) {
        bad("non-trivial quiver needs at least one arrow");
        return report;
    }

    std::set<int> ids;
    for (const Arrow& a : q.arrows) {
        if (!ids.insert(a.id).second) bad("duplicate arrow id " + std::to_string(a.id));
        if (!q.has_vertex(a.tail) || !q.has_vertex(a.head))
            bad("arrow " + std::to_string(a.id) + " touches unknown vertex");
    }

    for (int v : q.vertices) {
        if (q.out_arrows(v).size() > 2)
            bad("vertex " + std::to_string(v) + " has out-degree > 2");
        if (q.in_arrows(v).size() > 2)
            bad("vertex " + std::to_string(v) + " has in-degree > 2");
    }

    if (!quiver_connected(q)) bad("quiver is not connected");

    // Cycle-decomposition conditions.
    std::map<int, int> owner_count;
    for (const Cycle& c : q.cycles) {
        if (c.arrows.empty()) {
            bad("empty cycle in decomposition");
            continue;
        }
        if (c.mult < 1) bad("cycle multiplicity must be >= 1");
        if (c.is_loop() && c.mult <= 1)
            bad("violates cycle-decomposition condition (3): loop cycle has multiplicity 1");
        for (size_t t = 0; t < c.arrows.size(); ++t) {
            if (!q.has_arrow(c.arrows[t])) {
                bad("cycle uses unknown arrow " + std::to_string(c.arrows[t]));
                continue;
            }
            ++owner_count[c.arrows[t]];
            const Arrow& cur = q.arrow(c.arrows[t]);
            const Arrow& nxt = q.arrow(c.arrows[(t + 1) % c.arrows.size()]);
            if (cur.head != nxt.tail)
                bad("cycle is not a closed walk at arrow " + std::to_string(cur.id));
        }
    }
    for (const Arrow& a : q.arrows) {
        auto it = owner_count.find(a.id);
        if (it == owner_count.end() || it->second != 1) {
            bad("arrows not partitioned: arrow " + std::to_string(a.id) +
                " lies in " + std::to_string(it == owner_count.end() ? 0 : it->second) +
                " cycles");
        }
    }

    // Every vertex on some cycle, and at most two visits in total.
    for (int v : q.vertices) {
        int visits = 0;
        bool covered = false;
        for (const Cycle& c : q.cycles)
            for (int id : c.arrows)
                if (q.has_arrow(id) && q.arrow(id).tail == v) {
                    ++visits;
                    covered = true;
                }
        if (!covered) bad("vertex " + std::to_string(v) + " lies on no cycle");
        if (visits > 2)
            bad("vertex " + std::to_string(v) + " is visited more than twice");
    }

    return report;
}

bool is_valid(const SBQuiver& q) { return validate(q).empty(); }

int next_arrow(const SBQuiver& q, int arrow_id) {
    for (const Cycle& c : q.cycles)
        for (size_t t = 0; t < c.arrows.size(); ++t)
            if (c.arrows[t] == arrow_id) return c.arrows[(t + 1) % c.arrows.size()];
    throw std::invalid_argument("unknown arrow id " + std::to_string(arrow_id));
}

int prev_arrow(const SBQuiver& q, int arrow_id) {
    for (const Cycle& c : q.cycles)
        for (size_t t = 0; t < c.arrows.size(); ++t)
            if (c.arrows[t] == arrow_id)
                return c.arrows[(t + c.arrows.size() - 1) % c.arrows.size()];
    throw std::invalid_argument("unknown arrow id " + std::to_string(arrow_id));
}

bool is_multiplex(const SBQuiver& q, int vertex) {
    if (!q.has_vertex(vertex)) throw std::invalid_argument("unknown vertex");
    if (q.trivial) return false;
    for (const Arrow& a : q.arrows) {
        if (a.tail != vertex) continue;
        for (const Arrow& b : q.arrows) {
            if (b.id == a.id) continue;
            if (b.tail != a.head || b.head != vertex) continue;
            if (next_arrow(q, a.id) != b.id && next_arrow(q, b.id) != a.id) return true;
        }
    }
    return false;
}

SBQuiver opposite(const SBQuiver& q) {
    SBQuiver r = q;
    for (Arrow& a : r.arrows) std::swap(a.tail, a.head);
    for (Cycle& c : r.cycles) std::reverse(c.arrows.begin(), c.arrows.end());
    return r;
}

}  // namespace brauerkit
