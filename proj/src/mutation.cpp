#include "brauerkit/mutation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace brauerkit {

namespace {

struct WorkCycle {
    std::vector<int> arrows;
    int mult = 1;
    int origin = -1;
    bool dead = false;
};

// One visit of the pivot: arrive via `a`, depart via `q`, optionally with the
// loop `carry` between them (the two pivot visits joined by a loop detach and
// re-attach together, keeping the loop).
struct Slot {
    int a = -1;
    int carry = -1;
    int q = -1;
    int cycle = -1;
    int target = -1;        // head of q
    int anchor_depart = -1; // depart arrow of the target's other visit, -1 = plain end
    std::string tag;
};

struct Surgery {
    std::map<int, Arrow> arrows;
    std::vector<WorkCycle> cycles;
    int fresh = 0;
    std::vector<int> minted;

    int mint(int tail, int head) {
        int id = fresh++;
        arrows[id] = {id, tail, head};
        minted.push_back(id);
        return id;
    }

    WorkCycle& cycle_with(int arrow_id) {
        for (WorkCycle& c : cycles) {
            if (c.dead) continue;
            for (int a : c.arrows)
                if (a == arrow_id) return c;
        }
        throw std::logic_error("arrow not in any live cycle");
    }

    // Rotate so that `first` leads, drop `count` leading arrows, prepend
    // `replacement`.
    void splice(WorkCycle& c, int first, int count, const std::vector<int>& replacement) {
        auto it = std::find(c.arrows.begin(), c.arrows.end(), first);
        if (it == c.arrows.end()) throw std::logic_error("splice anchor missing");
        std::rotate(c.arrows.begin(), it, c.arrows.end());
        for (int k = 0; k < count; ++k) arrows.erase(c.arrows[k]);
        c.arrows.erase(c.arrows.begin(), c.arrows.begin() + count);
        c.arrows.insert(c.arrows.begin(), replacement.begin(), replacement.end());
    }
};

}  // namespace

MutationResult mutate_right_traced(const SBQuiver& q, int vertex) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (q.trivial) throw std::invalid_argument("cannot mutate the trivial SB quiver");
    if (!q.has_vertex(vertex)) throw std::invalid_argument("unknown vertex");

    MutationResult res;

    // Multiplex fixed point: around i the quiver looks like j' <-> i <-> j
    // with j' = h, and right mutation is defined to change nothing.
    if (is_multiplex(q, vertex)) {
        for (const Arrow& alpha : q.arrows) {
            if (alpha.tail != vertex) continue;
            for (const Arrow& beta : q.arrows) {
                if (beta.id == alpha.id || beta.tail != alpha.head || beta.head != vertex)
                    continue;
                if (next_arrow(q, alpha.id) == beta.id || next_arrow(q, beta.id) == alpha.id)
                    continue;
                int alpha_prime = prev_arrow(q, alpha.id);
                int beta_prime = next_arrow(q, beta.id);
                int j_prime = q.arrow(alpha_prime).tail;
                int h = q.arrow(beta_prime).head;
                // Fixed point only when the two visits of h involved are
                // distinct, i.e. beta' does not feed straight into alpha'.
                if (j_prime == h && next_arrow(q, beta_prime) != alpha_prime) {
                    res.quiver = q;
                    for (size_t c = 0; c < q.cycles.size(); ++c)
                        res.cycle_origin.push_back(static_cast<int>(c));
                    res.case_tags.push_back("multiplex-fixed");
                    res.identity = true;
                    return res;
                }
            }
        }
    }

    Surgery s;
    for (const Arrow& a : q.arrows) s.arrows[a.id] = a;
    s.fresh = q.max_arrow_id() + 1;
    for (size_t c = 0; c < q.cycles.size(); ++c)
        s.cycles.push_back({q.cycles[c].arrows, q.cycles[c].mult, static_cast<int>(c), false});

    // Collect the pivot's visits. A loop at the pivot is skipped as a depart:
    // it is the carried corner of the paired visit behind it. Cycles made of
    // pivot loops only (an exceptional end) stay put.
    std::vector<Slot> slots;
    for (size_t ci = 0; ci < q.cycles.size(); ++ci) {
        const auto& arr = q.cycles[ci].arrows;
        int len = static_cast<int>(arr.size());
        for (int t = 0; t < len; ++t) {
            const Arrow& dep = q.arrow(arr[t]);
            if (dep.tail != vertex || dep.is_loop()) continue;
            Slot slot;
            slot.q = dep.id;
            slot.cycle = static_cast<int>(ci);
            slot.target = dep.head;
            const Arrow& before = q.arrow(arr[(t + len - 1) % len]);
            if (before.is_loop() && before.tail == vertex) {
                slot.carry = before.id;
                slot.a = arr[(t + len - 2) % len];
            } else {
                slot.a = before.id;
            }
            slots.push_back(slot);
        }
    }
    if (slots.empty()) {
        res.quiver = q;
        for (size_t c = 0; c < q.cycles.size(); ++c)
            res.cycle_origin.push_back(static_cast<int>(c));
        res.case_tags.push_back("no-op");
        res.identity = true;
        return res;
    }
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.q < b.q; });

    // Anchor of each re-attachment: the depart arrow of the target vertex's
    // other visit, identified before any surgery.
    for (Slot& slot : slots) {
        int ours = next_arrow(q, slot.q);
        for (const Arrow& a : q.arrows)
            if (a.tail == slot.target && a.id != ours) slot.anchor_depart = a.id;
    }

    // Detach phase: merge each visit's corner ((QM1) plus the removal steps).
    std::map<int, int> merged_into;          // arrive arrow -> merged arrow
    std::map<int, std::optional<int>> kill;  // slot arrows -> minted loop id
    for (Slot& slot : slots) {
        WorkCycle& c = s.cycle_with(slot.q);
        int count = slot.carry >= 0 ? 3 : 2;
        int h = s.arrows.at(slot.a).tail;
        if (static_cast<int>(c.arrows.size()) == count) {
            // The visit was the whole cycle; an exceptional multiplicity
            // survives as a loop cycle at h.
            s.splice(c, slot.a, count, {});
            c.dead = true;
            std::optional<int> minted_loop;
            if (c.mult > 1) {
                int x = s.mint(h, h);
                s.cycles.push_back({{x}, c.mult, -1, false});
                minted_loop = x;
                slot.tag = "qm1-2";
            } else {
                slot.tag = "qm1-0";
            }
            kill[slot.a] = minted_loop;
            kill[slot.q] = minted_loop;
        } else {
            int m = s.mint(h, slot.target);
            s.splice(c, slot.a, count, {m});
            merged_into[slot.a] = m;
            slot.tag = "qm1-1";
        }
        // The carried loop leaves its cycle but stays in the quiver until the
        // attach phase re-seats it.
        if (slot.carry >= 0) s.arrows[slot.carry] = {slot.carry, vertex, vertex};
    }

    // Attach phase ((QM3) and the cycle bookkeeping): split the anchor's
    // depart corner, or open a fresh 2- or 3-cycle at a plain end.
    for (Slot& slot : slots) {
        std::vector<int> inserted;
        auto body = [&](int into_head) {
            inserted.push_back(s.mint(slot.target, vertex));
            if (slot.carry >= 0) inserted.push_back(slot.carry);
            inserted.push_back(s.mint(vertex, into_head));
        };
        int anchor = slot.anchor_depart;
        std::optional<int> minted_loop;
        bool plain_end = anchor < 0;
        if (!plain_end) {
            if (auto it = merged_into.find(anchor); it != merged_into.end()) anchor = it->second;
            if (auto it = kill.find(anchor); it != kill.end()) {
                if (it->second.has_value()) anchor = *it->second;
                else plain_end = true;
            }
        }
        if (plain_end) {
            body(slot.target);
            s.cycles.push_back({inserted, 1, -1, false});
            slot.tag += slot.carry >= 0 ? "+qm3-2b-loop" : "+qm3-2b";
        } else {
            WorkCycle& c = s.cycle_with(anchor);
            body(s.arrows.at(anchor).head);
            s.splice(c, anchor, 1, inserted);
            slot.tag += "+qm3-1";
        }
    }

    // Assemble, giving fresh arrows the smallest unused ids.
    SBQuiver out;
    out.vertices = q.vertices;
    std::set<int> used;
    for (const auto& [id, a] : s.arrows)
        if (id <= q.max_arrow_id()) used.insert(id);
    std::map<int, int> rename;
    int next_free = 1;
    for (int id : s.minted) {
        if (!s.arrows.count(id)) continue;  // merged arrow later consumed by a split
        while (used.count(next_free)) ++next_free;
        rename[id] = next_free;
        used.insert(next_free);
    }
    for (const auto& [id, a] : s.arrows) {
        Arrow copy = a;
        if (auto it = rename.find(id); it != rename.end()) copy.id = it->second;
        out.arrows.push_back(copy);
    }
    std::sort(out.arrows.begin(), out.arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    for (const WorkCycle& c : s.cycles) {
        if (c.dead) continue;
        Cycle cy;
        cy.mult = c.mult;
        for (int a : c.arrows) {
            auto it = rename.find(a);
            cy.arrows.push_back(it == rename.end() ? a : it->second);
        }
        out.cycles.push_back(std::move(cy));
        res.cycle_origin.push_back(c.origin);
    }

    auto out_report = validate(out);
    if (!out_report.empty())
        throw std::logic_error("mutation produced an invalid SB quiver: " + out_report.front());

    res.quiver = std::move(out);
    for (const Slot& slot : slots) res.case_tags.push_back(slot.tag);
    return res;
}

SBQuiver mutate_right(const SBQuiver& q, int vertex) {
    return mutate_right_traced(q, vertex).quiver;
}

SBQuiver mutate_left(const SBQuiver& q, int vertex) {
    return opposite(mutate_right(opposite(q), vertex));
}

}  // namespace brauerkit
