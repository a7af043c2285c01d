#include "brauerkit/derived.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "brauerkit/canonical.hpp"
#include "brauerkit/correspondence.hpp"
#include "brauerkit/flip.hpp"

namespace brauerkit {

OkuyamaComplex okuyama_complex(const SBQuiver& q, int pivot) {
    CombinatorialModule m = local_module(q, pivot);
    OkuyamaComplex t;
    t.pivot = pivot;
    t.degree0 = m.omega_top;
    return t;
}

Matrix euler_cartan(const SBQuiver& q, int pivot) {
    // dim Hom(P_a, P_b) := Cartan entry (b, a); the matrices here are
    // symmetric, so the convention only matters for reading the code.
    Matrix c = cartan_matrix(q);
    OkuyamaComplex t = okuyama_complex(q, pivot);
    int n = static_cast<int>(q.vertices.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[q.vertices[i]] = i;
    int p = index.at(pivot);

    std::vector<int> top;
    for (int v : t.degree0) top.push_back(index.at(v));

    Matrix out(n, std::vector<long long>(n, 0));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != p && b != p) {
                out[a][b] = c[a][b];
            } else if (a != p) {
                long long sum = 0;
                for (int v : top) sum += c[a][v];
                out[a][b] = sum - c[a][p];
            } else if (b != p) {
                long long sum = 0;
                for (int v : top) sum += c[v][b];
                out[a][b] = sum - c[p][b];
            } else {
                long long sum = 0;
                for (int v : top)
                    for (int w : top) sum += c[v][w];
                long long cross = 0;
                for (int v : top) cross += c[v][p];
                out[a][b] = sum - 2 * cross + c[p][p];
            }
        }
    }
    return out;
}

namespace {

// First vertex other than `pivot` reached when following a cycle onward from
// an arrow into `pivot` (skipping one possible loop).
int exit_vertex(const SBQuiver& q, int pivot, int in_arrow) {
    int nxt = next_arrow(q, in_arrow);
    if (q.arrow(nxt).is_loop()) nxt = next_arrow(q, nxt);
    return q.arrow(nxt).head;
}

}  // namespace

Matrix ext_table(const SBQuiver& q, int pivot) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (q.trivial) throw std::invalid_argument("trivial SB quiver");
    if (!q.has_vertex(pivot)) throw std::invalid_argument("unknown vertex");

    int n = static_cast<int>(q.vertices.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[q.vertices[i]] = i;

    auto arrows_between = [&](int x, int y) {
        int k = 0;
        for (const Arrow& a : q.arrows)
            if (a.tail == x && a.head == y) ++k;
        return k;
    };
    auto arrows_from = [&](int x) {
        std::vector<int> ids;
        for (const Arrow& a : q.arrows)
            if (a.tail == x) ids.push_back(a.id);
        return ids;
    };

    Matrix out(n, std::vector<long long>(n, 0));
    for (int ai = 0; ai < n; ++ai) {
        for (int bi = 0; bi < n; ++bi) {
            int a = q.vertices[ai];
            int b = q.vertices[bi];
            long long dim = 0;
            if (a != pivot && b != pivot) {
                int to_a = arrows_between(pivot, a);
                int to_b = arrows_between(pivot, b);
                if (to_a == 0 && to_b == 0) {
                    // (1)(i): untouched corner of the quiver.
                    dim = arrows_between(a, b);
                } else if (to_a == 0) {
                    // (1)(ii): arrows into b come from old ones and from the
                    // cycles threading a -> pivot -> b.
                    dim = arrows_between(a, b);
                    for (const Arrow& w : q.arrows)
                        if (w.tail == a && w.head == pivot &&
                            exit_vertex(q, pivot, w.id) == b)
                            ++dim;
                } else if (to_b == 0) {
                    // (1)(iii)
                    bool chain = false;
                    for (const Arrow& al : q.arrows)
                        if (al.tail == pivot && al.head == a &&
                            q.arrow(next_arrow(q, al.id)).head == b &&
                            q.arrow(next_arrow(q, al.id)).tail == a)
                            chain = true;
                    dim = (chain && to_a < 2) ? 1 : 0;
                } else if (a != b) {
                    // (1)(iv), distinct targets: the pivot has full out-degree
                    // here, so no loops interleave.
                    for (const Arrow& al : q.arrows) {
                        if (al.tail != pivot || al.head != a) continue;
                        int nxt = next_arrow(q, al.id);
                        const Arrow& na1 = q.arrow(nxt);
                        if (na1.tail == a && na1.head == b) ++dim;
                        if (na1.tail == a && na1.head == pivot &&
                            q.arrow(next_arrow(q, nxt)).head == b)
                            ++dim;
                    }
                } else {
                    // (1)(iv), equal targets: the short exceptional cycle or a
                    // loop behind the target. A second arrow from the pivot
                    // consumes the freshly minted loop, as in (1)(iii).
                    for (const Arrow& al : q.arrows) {
                        if (al.tail != pivot || al.head != a) continue;
                        const Cycle& c = q.cycles[q.cycle_of(al.id)];
                        if (c.mult > 1 && to_a < 2) {
                            bool back = false, extra = false;
                            for (int id : c.arrows) {
                                const Arrow& x = q.arrow(id);
                                if (x.tail == a && x.head == pivot) back = true;
                                else if (x.id != al.id && !(x.is_loop() && x.tail == pivot))
                                    extra = true;
                            }
                            if (back && !extra) ++dim;
                        }
                        const Arrow& nxt = q.arrow(next_arrow(q, al.id));
                        if (nxt.is_loop() && nxt.tail == a) ++dim;
                    }
                }
            } else if (b == pivot && a != pivot) {
                // (2)(i)(a) / (2)(ii)(a)
                dim = arrows_between(pivot, a);
            } else if (a == pivot && b != pivot) {
                int to_b = arrows_between(pivot, b);
                // Broken paths through the pivot's own loops witness nothing;
                // the middle vertex is always a proper neighbour.
                auto broken_onward = [&]() {
                    long long n = 0;
                    for (int al : arrows_from(pivot)) {
                        if (q.arrow(al).is_loop()) continue;
                        for (const Arrow& be : q.arrows)
                            if (be.tail == q.arrow(al).head && be.head == b &&
                                be.id != next_arrow(q, al))
                                ++n;
                    }
                    return n;
                };
                auto broken_return = [&]() {
                    long long n = 0;
                    for (int al : arrows_from(pivot)) {
                        int h = q.arrow(al).head;
                        if (h == pivot) continue;
                        for (const Arrow& be : q.arrows)
                            if (be.tail == h && be.head == pivot &&
                                be.id != next_arrow(q, al) &&
                                exit_vertex(q, pivot, be.id) == b)
                                ++n;
                    }
                    return n;
                };
                if (to_b == 0) {
                    // (2)(i)(b)
                    dim = broken_onward();
                } else if (q.visit_count(b) == 1) {
                    // (2)(ii)(b1): uniserial target.
                    dim = broken_return() > 0 ? 2 : 1;
                } else {
                    // (2)(ii)(b2): both broken shapes count.
                    dim = broken_onward() + broken_return();
                }
            } else {
                // (3): loops at the pivot are untouched.
                dim = arrows_between(pivot, pivot);
            }
            out[ai][bi] = dim;
        }
    }
    return out;
}

std::vector<long long> smith_invariant_factors(Matrix m) {
    int n = static_cast<int>(m.size());
    std::vector<long long> diag;
    int r = 0;
    while (r < n) {
        // Find the minimal nonzero entry in the remaining block.
        int pi = -1, pj = -1;
        for (int i = r; i < n; ++i)
            for (int j = r; j < n; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[r], m[pi]);
        for (int i = r; i < n; ++i) std::swap(m[i][r], m[i][pj]);

        bool clean = true;
        for (int i = r + 1; i < n; ++i) {
            long long f = m[i][r] / m[r][r];
            for (int j = r; j < n; ++j) m[i][j] -= f * m[r][j];
            if (m[i][r] != 0) clean = false;
        }
        for (int j = r + 1; j < n; ++j) {
            long long f = m[r][j] / m[r][r];
            for (int i = r; i < n; ++i) m[i][j] -= f * m[i][r];
            if (m[r][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainder appeared, redo this pivot

        // The pivot must divide the rest of the block.
        bool divides = true;
        for (int i = r + 1; i < n && divides; ++i)
            for (int j = r + 1; j < n && divides; ++j)
                if (m[i][j] % m[r][r] != 0) {
                    for (int k = r; k < n; ++k) m[r][k] += m[i][k];
                    divides = false;
                }
        if (!divides) continue;

        diag.push_back(std::abs(m[r][r]));
        ++r;
    }
    while (static_cast<int>(diag.size()) < n) diag.push_back(0);
    return diag;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "edges=" << edge_count << " mults=[";
    for (size_t i = 0; i < multiplicity_multiset.size(); ++i)
        os << (i ? "," : "") << multiplicity_multiset[i];
    os << "] factors=[";
    for (size_t i = 0; i < cartan_invariant_factors.size(); ++i)
        os << (i ? "," : "") << cartan_invariant_factors[i];
    os << "]";
    return os.str();
}

Fingerprint fingerprint(const SBQuiver& q) {
    Fingerprint f;
    f.edge_count = static_cast<long long>(q.vertices.size());
    if (q.trivial) {
        f.multiplicity_multiset = {1, 1};
        f.cartan_invariant_factors = {1};
        return f;
    }
    for (const Cycle& c : q.cycles) f.multiplicity_multiset.push_back(c.mult);
    for (int v : q.vertices)
        if (q.visit_count(v) == 1) f.multiplicity_multiset.push_back(1);
    std::sort(f.multiplicity_multiset.rbegin(), f.multiplicity_multiset.rend());
    f.cartan_invariant_factors = smith_invariant_factors(cartan_matrix(q));
    return f;
}

Fingerprint fingerprint(const BrauerGraph& g) {
    Fingerprint f;
    f.edge_count = static_cast<long long>(g.edges.size());
    for (const BrauerVertex& v : g.vertices) f.multiplicity_multiset.push_back(v.mult);
    std::sort(f.multiplicity_multiset.rbegin(), f.multiplicity_multiset.rend());
    if (g.is_trivial()) {
        f.cartan_invariant_factors = {1};
        return f;
    }
    f.cartan_invariant_factors = smith_invariant_factors(cartan_matrix(brauer_quiver(g)));
    return f;
}

FlipSearchResult flip_search(const BrauerGraph& g1, const BrauerGraph& g2, int max_depth,
                             std::size_t max_states) {
    FlipSearchResult res;
    if (!(fingerprint(g1) == fingerprint(g2))) {
        res.fingerprint_mismatch = true;
        return res;
    }
    std::string goal = canonical_form(g2);
    std::string start = canonical_form(g1);
    if (start == goal) {
        res.found = true;
        return res;
    }

    struct Node {
        BrauerGraph graph;
        int depth;
        std::string parent;
        FlipStep step;
    };
    std::map<std::string, Node> seen;
    std::queue<std::string> frontier;
    seen[start] = {g1, 0, "", {}};
    frontier.push(start);

    while (!frontier.empty()) {
        std::string key = frontier.front();
        frontier.pop();
        Node node = seen.at(key);
        if (node.depth >= max_depth) continue;
        for (const BrauerEdge& e : node.graph.edges) {
            for (bool left : {false, true}) {
                BrauerGraph next =
                    left ? flip_left(node.graph, e.id) : flip_right(node.graph, e.id);
                std::string nk = canonical_form(next);
                if (seen.count(nk)) continue;
                seen[nk] = {next, node.depth + 1, key, {e.id, left}};
                if (nk == goal) {
                    std::vector<FlipStep> steps;
                    for (std::string at = nk; at != start; at = seen.at(at).parent)
                        steps.push_back(seen.at(at).step);
                    std::reverse(steps.begin(), steps.end());
                    res.found = true;
                    res.steps = std::move(steps);
                    return res;
                }
                if (seen.size() > max_states) {
                    res.budget_exhausted = true;
                    return res;
                }
                frontier.push(nk);
            }
        }
    }
    res.budget_exhausted = true;
    return res;
}

}  // namespace brauerkit
