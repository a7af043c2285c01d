#include "brauerkit/reduction.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "brauerkit/mutation.hpp"

namespace brauerkit {

namespace {

std::set<int> cycle_vertices(const SBQuiver& q, int c) {
    std::set<int> vs;
    for (int a : q.cycles.at(c).arrows) vs.insert(q.arrow(a).tail);
    return vs;
}

bool covers_all(const SBQuiver& q, int c) {
    std::set<int> vs = cycle_vertices(q, c);
    for (int v : q.vertices)
        if (!vs.count(v)) return false;
    return true;
}

// New index of a tracked cycle after one mutation, -1 if it dissolved.
int retrack(const MutationResult& m, int old_index) {
    for (size_t c = 0; c < m.cycle_origin.size(); ++c)
        if (m.cycle_origin[c] == old_index) return static_cast<int>(c);
    return -1;
}

std::string joined_tags(const MutationResult& m) {
    std::string s;
    for (const std::string& t : m.case_tags) {
        if (!s.empty()) s += "+";
        s += t;
    }
    return s;
}

// Vertex off the tracked cycle with an arrow into it, smallest first.
std::optional<int> r1_candidate(const SBQuiver& q, int c0) {
    std::set<int> on = cycle_vertices(q, c0);
    for (int i : q.vertices) {
        if (on.count(i)) continue;
        for (const Arrow& a : q.arrows)
            if (a.tail == i && on.count(a.head)) return i;
    }
    return std::nullopt;
}

struct R2Start {
    int vertex = 0;       // i_1
    int start_arrow = 0;  // arrow of C departing i_1
};

// Start vertices of one (R2) micro-step on cycle c, side conditions included.
std::vector<R2Start> r2_candidates(const SBQuiver& q, int c0, int c, bool conditioned) {
    std::vector<R2Start> out;
    const Cycle& cyc = q.cycles.at(c);
    for (int gamma : cyc.arrows) {
        const Arrow& g = q.arrow(gamma);
        if (g.is_loop()) continue;
        int i1 = g.tail;
        // The departure of i1's visit on the tracked cycle.
        int alpha = -1;
        for (int a : q.cycles.at(c0).arrows)
            if (q.arrow(a).tail == i1) alpha = a;
        if (alpha < 0) continue;
        if (conditioned) {
            int h = q.arrow(alpha).head;
            bool ok = false;
            if (q.visit_count(h) == 1) {
                ok = true;  // P_h uniserial
            } else {
                int ell = q.arrow(prev_arrow(q, gamma)).tail;
                int ours = next_arrow(q, alpha);
                for (const Arrow& b : q.arrows)
                    if (b.tail == h && b.id != ours && q.cycle_of(b.id) != c0 && h != ell)
                        ok = true;
            }
            if (!ok) continue;
        }
        out.push_back({i1, gamma});
    }
    std::sort(out.begin(), out.end(),
              [](const R2Start& a, const R2Start& b) { return a.start_arrow < b.start_arrow; });
    return out;
}

}  // namespace

ReductionOutcome apply_r1(const SBQuiver& q, int c0_index) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (c0_index < 0 || c0_index >= static_cast<int>(q.cycles.size()))
        throw std::invalid_argument("unknown cycle index");
    auto cand = r1_candidate(q, c0_index);
    if (!cand)
        throw std::runtime_error("(R1) complete: every vertex lies on the tracked cycle");

    MutationResult m = mutate_right_traced(q, *cand);
    ReductionOutcome out;
    out.quiver = std::move(m.quiver);
    out.tracked_cycle = retrack(m, c0_index);
    if (out.tracked_cycle < 0 || !cycle_vertices(out.quiver, out.tracked_cycle).count(*cand))
        throw std::logic_error("(R1) failed to absorb the vertex");
    out.log.push_back({0, *cand, "r1:" + joined_tags(m), out.tracked_cycle});
    return out;
}

ReductionOutcome apply_r2(const SBQuiver& q, int c0_index, int c_index) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (c0_index == c_index) throw std::invalid_argument("(R2) needs a cycle other than C0");
    if (c0_index < 0 || c0_index >= static_cast<int>(q.cycles.size()) || c_index < 0 ||
        c_index >= static_cast<int>(q.cycles.size()))
        throw std::invalid_argument("unknown cycle index");
    if (q.cycles[c_index].is_loop()) throw std::invalid_argument("(R2) does not apply to loops");
    if (!covers_all(q, c0_index))
        throw std::invalid_argument("(R2) requires every vertex on the tracked cycle");

    ReductionOutcome out;
    out.quiver = q;
    out.tracked_cycle = c0_index;
    int c = c_index;
    int step = 0;
    while (c >= 0) {
        auto starts = r2_candidates(out.quiver, out.tracked_cycle, c, true);
        std::optional<MutationResult> done;
        int used_vertex = -1;
        for (const R2Start& s : starts) {
            MutationResult m = mutate_right_traced(out.quiver, s.vertex);
            if (m.identity) continue;
            done = std::move(m);
            used_vertex = s.vertex;
            break;
        }
        if (!done) throw std::runtime_error("(R2) side condition unmet");
        int new_c0 = retrack(*done, out.tracked_cycle);
        int new_c = retrack(*done, c);
        out.quiver = std::move(done->quiver);
        out.tracked_cycle = new_c0;
        c = new_c;
        if (out.tracked_cycle < 0 || !covers_all(out.quiver, out.tracked_cycle))
            throw std::logic_error("(R2) lost full coverage of the tracked cycle");
        out.log.push_back({step++, used_vertex, "r2:" + joined_tags(*done), out.tracked_cycle});
        if (c >= 0 && out.quiver.cycles[c].is_loop()) break;  // dissolved into a loop
    }
    return out;
}

ReductionOutcome apply_r3(const SBQuiver& q, int c0_index, int vertex) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (!covers_all(q, c0_index))
        throw std::invalid_argument("(R3) requires every vertex on the tracked cycle");
    bool has_outside_loop = false;
    for (const Arrow& a : q.arrows)
        if (a.is_loop() && a.tail == vertex && q.cycle_of(a.id) != c0_index)
            has_outside_loop = true;
    if (!has_outside_loop)
        throw std::invalid_argument("(R3) needs a loop outside the tracked cycle at the vertex");

    auto satisfied = [&](const SBQuiver& r, int c0) {
        if (c0 < 0 || !covers_all(r, c0)) return false;
        if (!cycle_vertices(r, c0).count(vertex)) return false;
        for (const Arrow& a : r.arrows)
            if (a.is_loop() && a.tail == vertex && r.cycle_of(a.id) != c0) return true;
        return false;
    };

    ReductionOutcome out;
    out.quiver = q;
    out.tracked_cycle = c0_index;
    for (int step = 0; step < 2; ++step) {
        MutationResult m = mutate_right_traced(out.quiver, vertex);
        if (m.identity) break;
        out.tracked_cycle = retrack(m, out.tracked_cycle);
        out.quiver = std::move(m.quiver);
        out.log.push_back({step, vertex, "r3:" + joined_tags(m), out.tracked_cycle});
        if (satisfied(out.quiver, out.tracked_cycle)) return out;
    }
    if (!satisfied(out.quiver, out.tracked_cycle))
        throw std::runtime_error("(R3) postconditions unmet");
    return out;
}

ReductionOutcome to_double_star(const SBQuiver& q, long long budget) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (q.trivial) throw std::invalid_argument("cannot reduce the trivial SB quiver");
    if (budget < 0) budget = 50LL * static_cast<long long>(q.arrows.size()) *
                             static_cast<long long>(q.arrows.size());

    ReductionOutcome out;
    out.quiver = q;
    // Tracked cycle: first cycle of maximal multiplicity.
    out.tracked_cycle = 0;
    for (size_t c = 1; c < q.cycles.size(); ++c)
        if (q.cycles[c].mult > q.cycles[out.tracked_cycle].mult)
            out.tracked_cycle = static_cast<int>(c);

    long long steps = 0;
    auto account = [&](const std::vector<ReductionStep>& made) {
        for (const ReductionStep& s : made) {
            out.log.push_back(s);
            out.log.back().step = static_cast<int>(out.log.size()) - 1;
        }
        steps += static_cast<long long>(made.size());
        if (steps > budget)
            throw std::runtime_error("reduction budget exceeded after " +
                                     std::to_string(steps) + " mutations");
    };

    while (true) {
        if (!covers_all(out.quiver, out.tracked_cycle)) {
            ReductionOutcome one = apply_r1(out.quiver, out.tracked_cycle);
            out.quiver = std::move(one.quiver);
            out.tracked_cycle = one.tracked_cycle;
            account(one.log);
            continue;
        }

        // Non-loop cycles besides the tracked one, by ascending multiplicity.
        std::vector<int> candidates;
        int loop_max = 1;
        for (size_t c = 0; c < out.quiver.cycles.size(); ++c) {
            if (static_cast<int>(c) == out.tracked_cycle) continue;
            if (out.quiver.cycles[c].is_loop())
                loop_max = std::max(loop_max, out.quiver.cycles[c].mult);
            else
                candidates.push_back(static_cast<int>(c));
        }
        if (candidates.empty()) break;
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            if (out.quiver.cycles[a].mult != out.quiver.cycles[b].mult)
                return out.quiver.cycles[a].mult < out.quiver.cycles[b].mult;
            return a < b;
        });
        if (candidates.size() == 1 &&
            out.quiver.cycles[candidates[0]].mult >= loop_max)
            break;  // the surviving cycle is the vice-center

        int target = candidates.front();
        bool progressed = false;
        for (bool conditioned : {true, false}) {
            auto starts = r2_candidates(out.quiver, out.tracked_cycle, target, conditioned);
            for (const R2Start& s : starts) {
                MutationResult m = mutate_right_traced(out.quiver, s.vertex);
                if (m.identity) continue;
                int c0 = retrack(m, out.tracked_cycle);
                if (c0 < 0 || !covers_all(m.quiver, c0)) continue;
                out.tracked_cycle = c0;
                out.quiver = std::move(m.quiver);
                account({{0, s.vertex, std::string(conditioned ? "r2:" : "r2*:") +
                                             joined_tags(m),
                          out.tracked_cycle}});
                progressed = true;
                break;
            }
            if (progressed) break;
            if (conditioned) {
                // Clear a blocking loop first, as the reduction method allows.
                for (int v : out.quiver.vertices) {
                    bool has_loop = false;
                    for (const Arrow& a : out.quiver.arrows)
                        if (a.is_loop() && a.tail == v &&
                            out.quiver.cycle_of(a.id) != out.tracked_cycle)
                            has_loop = true;
                    if (!has_loop) continue;
                    try {
                        ReductionOutcome r3 = apply_r3(out.quiver, out.tracked_cycle, v);
                        if (r3.log.empty()) continue;
                        out.quiver = std::move(r3.quiver);
                        out.tracked_cycle = r3.tracked_cycle;
                        account(r3.log);
                        progressed = true;
                        break;
                    } catch (const std::exception&) {
                        continue;
                    }
                }
                if (progressed) break;
            }
        }
        if (!progressed)
            throw std::runtime_error("reduction is stuck: no applicable (R2)/(R3) step");
    }
    return out;
}

std::pair<bool, bool> is_double_star(const BrauerGraph& g) {
    auto report = validate(g);
    if (!report.empty()) throw std::invalid_argument("invalid graph: " + report.front());

    auto vertex_index_of_half = [&](int h) { return g.locate_half_edge(h).first; };
    auto shape = [&](int vi, int ui) {
        for (const BrauerEdge& e : g.edges) {
            int a = vertex_index_of_half(e.half_edges[0]);
            int b = vertex_index_of_half(e.half_edges[1]);
            if (a == vi && b == vi) continue;                      // loop at the center
            if ((a == vi && b == ui) || (b == vi && a == ui)) continue;  // center-vice
            if (a == vi && g.vertices[b].order.size() == 1) continue;    // external
            if (b == vi && g.vertices[a].order.size() == 1) continue;
            return false;
        }
        return true;
    };

    int n = static_cast<int>(g.vertices.size());
    if (n == 1) return {true, true};

    bool any_shape = false;
    bool mult_ok = false;
    for (int vi = 0; vi < n; ++vi) {
        for (int ui = 0; ui < n; ++ui) {
            if (ui == vi || !shape(vi, ui)) continue;
            any_shape = true;
            bool v_max = true, u_second = true;
            for (int w = 0; w < n; ++w) {
                if (g.vertices[w].mult > g.vertices[vi].mult) v_max = false;
                if (w != vi && g.vertices[w].mult > g.vertices[ui].mult) u_second = false;
            }
            if (v_max && u_second) mult_ok = true;
        }
    }
    return {any_shape, any_shape && mult_ok};
}

}  // namespace brauerkit
