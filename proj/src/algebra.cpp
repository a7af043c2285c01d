#include "brauerkit/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brauerkit {

int PathBasis::dim(int vertex) const {
    auto it = walks.find(vertex);
    if (it == walks.end()) throw std::invalid_argument("unknown vertex");
    int d = 2 - static_cast<int>(it->second.size());  // idempotent + socle - full walks
    for (const Walk& w : it->second) d += static_cast<int>(w.arrows.size());
    return d;
}

long long PathBasis::total_dim() const {
    long long d = 0;
    for (int v : vertices) d += dim(v);
    return d;
}

int PathBasis::end_of_prefix(const SBQuiver& q, int vertex, int walk, int length) const {
    const Walk& w = walks.at(vertex).at(walk);
    return q.arrow(w.arrows.at(length - 1)).head;
}

PathBasis path_basis(const SBQuiver& q) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (q.trivial) throw std::invalid_argument("trivial SB quiver has no path basis");

    PathBasis b;
    b.vertices = q.vertices;
    for (int v : q.vertices) b.walks[v] = {};
    for (size_t ci = 0; ci < q.cycles.size(); ++ci) {
        const Cycle& c = q.cycles[ci];
        int s = static_cast<int>(c.arrows.size());
        for (int t = 0; t < s; ++t) {
            Walk w;
            w.cycle = static_cast<int>(ci);
            w.start_vertex = q.arrow(c.arrows[t]).tail;
            w.arrows.reserve(static_cast<size_t>(c.mult) * s);
            for (int r = 0; r < c.mult * s; ++r)
                w.arrows.push_back(c.arrows[(t + r) % s]);
            b.walks[w.start_vertex].push_back(std::move(w));
        }
    }
    return b;
}

Matrix cartan_matrix(const SBQuiver& q) {
    PathBasis b = path_basis(q);
    int n = static_cast<int>(q.vertices.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[q.vertices[i]] = i;
    Matrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        int v = q.vertices[i];
        m[i][i] += 2;  // idempotent and socle
        for (const Walk& w : b.walks.at(v))
            for (size_t len = 1; len + 1 <= w.arrows.size(); ++len)
                m[i][index.at(q.arrow(w.arrows[len - 1]).head)] += 1;
    }
    return m;
}

CombinatorialModule local_module(const SBQuiver& q, int vertex) {
    PathBasis b = path_basis(q);
    if (!q.has_vertex(vertex)) throw std::invalid_argument("unknown vertex");

    CombinatorialModule m;
    m.vertex = vertex;
    m.dim = 1;  // idempotent
    bool all_walks_stay = true;
    for (const Walk& w : b.walks.at(vertex)) {
        // Prefixes made of loops at `vertex` survive the quotient; the first
        // prefix that leaves is a minimal generator of the kernel.
        size_t stay = 0;
        while (stay < w.arrows.size() && q.arrow(w.arrows[stay]).is_loop()) ++stay;
        m.dim += static_cast<long long>(std::min(stay, w.arrows.size() - 1));
        if (stay < w.arrows.size()) {
            all_walks_stay = false;
            m.omega_top.push_back(q.arrow(w.arrows[stay]).head);
        }
    }
    if (all_walks_stay) m.dim += 1;  // socle never leaves the vertex
    std::sort(m.omega_top.begin(), m.omega_top.end());
    return m;
}

namespace {

struct Fraction {
    long long num = 0;
    long long den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
};

long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("oracle overflow");
    return r;
}

Fraction sub_mul(const Fraction& a, const Fraction& b, const Fraction& f) {
    Fraction bf{checked_mul(b.num, f.num), checked_mul(b.den, f.den)};
    bf.reduce();
    Fraction r;
    r.num = checked_mul(a.num, bf.den) - checked_mul(bf.num, a.den);
    r.den = checked_mul(a.den, bf.den);
    r.reduce();
    return r;
}

// Rank of sparse rows over the rationals.
int rank_of(std::vector<std::map<int, Fraction>> rows) {
    int rank = 0;
    while (true) {
        size_t best = rows.size();
        int best_col = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) continue;
            int col = rows[i].begin()->first;
            if (best_col < 0 || col < best_col) {
                best_col = col;
                best = i;
            }
        }
        if (best_col < 0) break;
        std::map<int, Fraction> pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<long>(best));
        ++rank;
        Fraction lead = pivot.at(best_col);
        for (auto& row : rows) {
            auto it = row.find(best_col);
            if (it == row.end()) continue;
            Fraction f{checked_mul(it->second.num, lead.den), checked_mul(it->second.den, lead.num)};
            f.reduce();
            std::map<int, Fraction> out;
            for (const auto& [col, val] : row) {
                auto pit = pivot.find(col);
                Fraction nv = pit == pivot.end() ? val : sub_mul(val, pit->second, f);
                if (nv.num != 0) out[col] = nv;
            }
            for (const auto& [col, val] : pivot) {
                if (row.count(col)) continue;
                Fraction nv = sub_mul(Fraction{0, 1}, val, f);
                if (nv.num != 0) out[col] = nv;
            }
            row = std::move(out);
        }
    }
    return rank;
}

// A path is stored as (start vertex, arrow ids). Relation (ii) is applied as
// a monomial quotient during enumeration: every raw path containing a factor
// a*b with b != na(a) carries its own unit relation row, so dropping those
// coordinates up front changes no bucket dimension and keeps the enumeration
// polynomial. Relations (i) and (iii) enter as explicit elimination rows.
struct ReducedSpan {
    // bucket (tail, head) -> list of paths (arrow id lists; empty = idempotent)
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> bucket;
    std::map<std::pair<int, std::vector<int>>, std::pair<std::pair<int, int>, int>> index;

    void add(const SBQuiver& q, int tail, const std::vector<int>& p) {
        int head = p.empty() ? tail : q.arrow(p.back()).head;
        auto key = std::make_pair(tail, head);
        index[{tail, p}] = {key, static_cast<int>(bucket[key].size())};
        bucket[key].push_back(p);
    }
};

ReducedSpan reduced_span(const SBQuiver& q, int max_len) {
    ReducedSpan s;
    for (int v : q.vertices) {
        s.add(q, v, {});
        for (const Arrow& a : q.arrows) {
            if (a.tail != v) continue;
            std::vector<int> p{a.id};
            s.add(q, v, p);
            while (static_cast<int>(p.size()) < max_len) {
                p.push_back(next_arrow(q, p.back()));
                s.add(q, v, p);
            }
        }
    }
    return s;
}

Matrix quotient_dims(const SBQuiver& q, int max_len) {
    ReducedSpan span = reduced_span(q, max_len);
    PathBasis basis = path_basis(q);

    std::map<std::pair<int, int>, std::vector<std::map<int, Fraction>>> rows;
    auto unit_row = [&](int tail, const std::vector<int>& p) {
        auto [bucket, idx] = span.index.at({tail, p});
        rows[bucket].push_back({{idx, Fraction{1, 1}}});
    };

    for (int v : q.vertices) {
        const auto& ws = basis.walks.at(v);
        // (i): every path extending a full walk vanishes.
        for (const Walk& w : ws) {
            std::vector<int> p = w.arrows;
            while (static_cast<int>(p.size()) < max_len) {
                p.push_back(next_arrow(q, p.back()));
                unit_row(v, p);
            }
        }
        // (iii): the two full walks out of a twice-visited vertex coincide.
        if (ws.size() == 2) {
            auto [b0, i0] = span.index.at({v, ws[0].arrows});
            auto [b1, i1] = span.index.at({v, ws[1].arrows});
            if (b0 != b1) throw std::logic_error("socle walks land in different buckets");
            rows[b0].push_back({{i0, Fraction{1, 1}}, {i1, Fraction{-1, 1}}});
        }
    }

    int n = static_cast<int>(q.vertices.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[q.vertices[i]] = i;
    Matrix m(n, std::vector<long long>(n, 0));
    for (const auto& [bucket, ps] : span.bucket) {
        int ideal_rank = 0;
        auto it = rows.find(bucket);
        if (it != rows.end()) ideal_rank = rank_of(it->second);
        m[index.at(bucket.first)][index.at(bucket.second)] =
            static_cast<long long>(ps.size()) - ideal_rank;
    }
    return m;
}

}  // namespace

int oracle_default_bound(const SBQuiver& q) {
    int longest = 0;
    for (const Cycle& c : q.cycles)
        longest = std::max(longest, c.mult * static_cast<int>(c.arrows.size()));
    return 2 * longest + 2;
}

Matrix oracle_quotient(const SBQuiver& q, int max_len) {
    auto report = validate(q);
    if (!report.empty()) throw std::invalid_argument("invalid SB quiver: " + report.front());
    if (q.trivial) throw std::invalid_argument("trivial SB quiver");
    int longest = 0;
    for (const Cycle& c : q.cycles)
        longest = std::max(longest, c.mult * static_cast<int>(c.arrows.size()));
    if (max_len < 2 * longest)
        throw std::invalid_argument("oracle bound too small: need at least " +
                                    std::to_string(2 * longest));
    Matrix at = quotient_dims(q, max_len);
    Matrix before = quotient_dims(q, max_len - 1);
    if (at != before)
        throw std::runtime_error("oracle dimensions did not stabilize; raise max_len");
    return at;
}

}  // namespace brauerkit
