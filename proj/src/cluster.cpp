#include "plwb/cluster.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace plwb {

std::string Seed::canonical_key() const {
    std::vector<std::string> keys;
    if (pluecker) {
        for (auto& v : pvars)
            keys.push_back((v.sgn < 0 ? "-" : "+") + unit_to_string(v.unit));
    } else {
        for (auto& v : gvars) keys.push_back(v.str());
    }
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    for (auto& k : keys) os << k << "|";
    return os.str();
}

Seed a2_seed() {
    Seed s;
    s.pluecker = false;
    s.quiver.b = {{0, 1}, {-1, 0}};
    s.gvars = {Poly::var(1), Poly::var(2)};
    return s;
}

Seed a_path_seed(int m) {
    Seed s;
    s.pluecker = false;
    s.quiver.b.assign(std::size_t(m), std::vector<long>(std::size_t(m), 0));
    for (int i = 0; i + 1 < m; ++i) {
        s.quiver.b[i][i + 1] = 1;
        s.quiver.b[i + 1][i] = -1;
    }
    for (int i = 1; i <= m; ++i) s.gvars.push_back(Poly::var(i));
    return s;
}

namespace {

// Positive Pluecker coordinate |v_i, v_j| = x_j - x_i for i < j: the negated
// literal difference atom.
SignedUnit pluecker_var(int i, int j) { return atom_diff(i, j).negated(); }

}  // namespace

Seed seed_from_triangulation(const Dissection& t) {
    if (!t.is_triangulation()) throw NotTriangulation();
    int n = t.n;
    // Vertex order: sides (i, i+1) and (1, n), then diagonals, lexicographic.
    std::vector<Diagonal> segments;
    for (int i = 1; i < n; ++i) segments.push_back({i, i + 1});
    segments.push_back({1, n});
    std::size_t side_count = segments.size();
    for (auto& d : t.diagonals) segments.push_back(d);
    std::sort(segments.begin() + long(side_count), segments.end());

    std::map<Diagonal, int> index;
    for (std::size_t i = 0; i < segments.size(); ++i) index[segments[i]] = int(i);

    Seed s;
    s.quiver.b.assign(segments.size(), std::vector<long>(segments.size(), 0));
    for (std::size_t i = 0; i < side_count; ++i) s.quiver.frozen.insert(int(i));
    for (auto& seg : segments) s.pvars.push_back(pluecker_var(seg.first, seg.second));

    // Each triangle (p < q < r) contributes the directed 3-cycle
    // (p,q) -> (q,r) -> (p,r) -> (p,q), matching W_triangle =
    // |pq| ^ |qr| + |qr| ^ |pr| + |pr| ^ |pq|.
    for (auto& cell : operadic_split(t)) {
        std::vector<int> v = cell;
        std::sort(v.begin(), v.end());
        int p = v[0], q = v[1], r = v[2];
        int e_pq = index[{p, q}], e_qr = index[{q, r}], e_pr = index[{p, r}];
        s.quiver.b[e_pq][e_qr] += 1;
        s.quiver.b[e_qr][e_pq] -= 1;
        s.quiver.b[e_qr][e_pr] += 1;
        s.quiver.b[e_pr][e_qr] -= 1;
        s.quiver.b[e_pr][e_pq] += 1;
        s.quiver.b[e_pq][e_pr] -= 1;
    }
    return s;
}

namespace {

struct TwoAtoms {
    UnitKey a, b;
    bool ok = false;
};

// Decompose an exponent map as a product of exactly two distinct atoms.
TwoAtoms as_two_atoms(const FactoredUnit& u) {
    TwoAtoms out;
    std::vector<UnitKey> keys;
    for (auto& [k, e] : u.terms()) {
        if (k.kind != UnitKey::Kind::Atom) return out;
        if (e == 2 && u.size() == 1) return out;  // a square, not a quad pattern
        if (e != 1) return out;
        keys.push_back(k);
    }
    if (keys.size() != 2) return out;
    out.a = keys[0];
    out.b = keys[1];
    out.ok = true;
    return out;
}

// Pluecker three-term normalization of A + B (values, both with the positive
// |.,.| reading): matches A = |ab||cd|, B = |ad||bc| (either order) and
// returns |ac||bd|.
std::optional<FactoredUnit> pluecker_sum(const FactoredUnit& a_red, const FactoredUnit& b_red) {
    TwoAtoms A = as_two_atoms(a_red), B = as_two_atoms(b_red);
    if (!A.ok || !B.ok) return std::nullopt;
    std::set<int> pts{A.a.i, A.a.j, A.b.i, A.b.j, B.a.i, B.a.j, B.b.i, B.b.j};
    if (pts.size() != 4) return std::nullopt;
    std::vector<int> v(pts.begin(), pts.end());
    int a = v[0], b = v[1], c = v[2], d = v[3];
    auto is_pair = [](const TwoAtoms& t, int p1, int q1, int p2, int q2) {
        UnitKey k1 = UnitKey::make_atom(p1, q1), k2 = UnitKey::make_atom(p2, q2);
        return (t.a == k1 && t.b == k2) || (t.a == k2 && t.b == k1);
    };
    // |ab||cd| + |ad||bc| = |ac||bd| for a<b<c<d
    bool m1 = is_pair(A, a, b, c, d) && is_pair(B, a, d, b, c);
    bool m2 = is_pair(B, a, b, c, d) && is_pair(A, a, d, b, c);
    if (!m1 && !m2) return std::nullopt;
    FactoredUnit r;
    r.add(UnitKey::make_atom(a, c), Rat(1));
    r.add(UnitKey::make_atom(b, d), Rat(1));
    return r;
}

}  // namespace

SignedUnit x_monomial(const Seed& s, int k) {
    if (!s.pluecker) throw std::domain_error("x_monomial: Pluecker backend only");
    SignedUnit x;
    for (std::size_t j = 0; j < s.quiver.size(); ++j) {
        long e = s.quiver.b[std::size_t(k)][j];
        if (e == 0) continue;
        SignedUnit v = s.pvars[j];
        for (long t = 0; t < (e < 0 ? -e : e); ++t) x = x * (e > 0 ? v : v.inverse());
    }
    return x;
}

Seed mutate(const Seed& s, int k) {
    if (s.quiver.frozen.count(k)) throw FrozenVertex();
    std::size_t n = s.quiver.size();
    Seed out = s;

    // Matrix rule.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long bik = s.quiver.b[i][std::size_t(k)];
            long bkj = s.quiver.b[std::size_t(k)][j];
            if (long(i) == k || long(j) == k)
                out.quiver.b[i][j] = -s.quiver.b[i][j];
            else if (bik * bkj > 0)
                out.quiver.b[i][j] = s.quiver.b[i][j] + (bik < 0 ? -bik : bik) * bkj;
            else
                out.quiver.b[i][j] = s.quiver.b[i][j];
        }

    // Exchange relation u_k u'_k = prod_{b_ik > 0} u_i^{b_ik} + prod_{b_kj > 0} u_j^{b_kj}.
    if (s.pluecker) {
        SignedUnit in, outp;
        bool have_in = false, have_out = false;
        for (std::size_t i = 0; i < n; ++i) {
            long bik = s.quiver.b[i][std::size_t(k)];
            if (bik > 0) {
                for (long t = 0; t < bik; ++t) in = in * s.pvars[i];
                have_in = true;
            }
            long bkj = s.quiver.b[std::size_t(k)][i];
            if (bkj > 0) {
                for (long t = 0; t < bkj; ++t) outp = outp * s.pvars[i];
                have_out = true;
            }
        }
        if (!have_in || !have_out || in.sgn != outp.sgn) throw NonMonomialSum();
        // Factor out the common monomial, normalize the remaining three-term.
        FactoredUnit gcd;
        for (auto& [key, e] : in.unit.terms()) {
            Rat other = outp.unit.coeff(key);
            Rat m = std::min(e, other);
            if (m > 0) gcd.add(key, m);
        }
        auto sum = pluecker_sum(in.unit - gcd, outp.unit - gcd);
        if (!sum) throw NonMonomialSum();
        SignedUnit total(gcd + *sum, in.sgn);
        out.pvars[std::size_t(k)] = total * s.pvars[std::size_t(k)].inverse();
    } else {
        Poly in = Poly::constant(1), outp = Poly::constant(1);
        for (std::size_t i = 0; i < n; ++i) {
            long bik = s.quiver.b[i][std::size_t(k)];
            for (long t = 0; t < bik; ++t) in = in * s.gvars[i];
            long bkj = s.quiver.b[std::size_t(k)][i];
            for (long t = 0; t < bkj; ++t) outp = outp * s.gvars[i];
        }
        auto q = Poly::laurent_div_exact(in + outp, s.gvars[std::size_t(k)]);
        if (!q) throw NonMonomialSum();  // Laurent phenomenon guarantees exactness
        out.gvars[std::size_t(k)] = *q;
    }
    return out;
}

Wedge<UnitKey> w_invariant(const Seed& s) {
    if (!s.pluecker) throw std::domain_error("w_invariant: Pluecker backend only");
    Wedge<UnitKey> w;
    std::size_t n = s.quiver.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long b = s.quiver.b[i][j];
            if (b <= 0) continue;  // sum over arrows, using skewness
            for (auto& [ki, ei] : s.pvars[i].unit.terms())
                for (auto& [kj, ej] : s.pvars[j].unit.terms())
                    w.add({ki, kj}, Rat(b) * ei * ej);
        }
    return w;
}

bool verify_mutation_identity(const Seed& s, int k, const PointCtx& ctx) {
    Seed m = mutate(s, k);
    Wedge<UnitKey> lhs = w_invariant(m) - w_invariant(s);
    SignedUnit x = x_monomial(s, k);
    SignedUnit opx = one_plus(x, ctx);
    Wedge<UnitKey> rhs;
    for (auto& [ka, ea] : opx.unit.terms())
        for (auto& [kb, eb] : x.unit.terms()) rhs.add({ka, kb}, -ea * eb);
    return lhs == rhs;
}

ExchangeGraph exchange_graph(const Seed& s0, std::size_t max_seeds, bool verify_w_identity,
                             const PointCtx* ctx) {
    ExchangeGraph g;
    std::map<std::string, std::size_t> seen;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> queue;
    g.seeds.push_back(s0);
    seen[s0.canonical_key()] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        std::size_t cur = queue.back();
        queue.pop_back();
        Seed s = g.seeds[cur];
        for (std::size_t k = 0; k < s.quiver.size(); ++k) {
            if (s.quiver.frozen.count(int(k))) continue;
            Seed next = mutate(s, int(k));
            if (verify_w_identity && ctx && !verify_mutation_identity(s, int(k), *ctx))
                throw std::domain_error("exchange_graph: W mutation identity failed");
            std::string key = next.canonical_key();
            auto it = seen.find(key);
            std::size_t idx;
            if (it == seen.end()) {
                if (g.seeds.size() >= max_seeds) throw BoundExceeded();
                idx = g.seeds.size();
                g.seeds.push_back(next);
                seen[key] = idx;
                queue.push_back(idx);
            } else {
                idx = it->second;
            }
            if (idx != cur) edges.insert({std::min(cur, idx), std::max(cur, idx)});
        }
    }
    g.edges.assign(edges.begin(), edges.end());

    // 2-face census by chordless cycles of length 4 and 5 (heuristic geometry).
    std::size_t nverts = g.seeds.size();
    std::vector<std::set<std::size_t>> adj(nverts);
    for (auto& [a, b] : g.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::set<std::vector<std::size_t>> cycles;
    std::function<void(std::vector<std::size_t>&)> dfs = [&](std::vector<std::size_t>& path) {
        std::size_t last = path.back();
        if (path.size() >= 4 && adj[last].count(path.front())) {
            // candidate cycle; check chordless
            bool chordless = true;
            for (std::size_t i = 0; i < path.size() && chordless; ++i)
                for (std::size_t j = i + 1; j < path.size() && chordless; ++j) {
                    bool adjacent_in_cycle =
                        (j == i + 1) || (i == 0 && j == path.size() - 1);
                    if (!adjacent_in_cycle && adj[path[i]].count(path[j])) chordless = false;
                }
            if (chordless) {
                std::vector<std::size_t> norm = path;
                std::size_t minpos =
                    std::size_t(std::min_element(norm.begin(), norm.end()) - norm.begin());
                std::rotate(norm.begin(), norm.begin() + long(minpos), norm.end());
                if (norm.size() > 2 && norm[1] > norm.back())
                    std::reverse(norm.begin() + 1, norm.end());
                cycles.insert(norm);
            }
        }
        if (path.size() == 5) return;
        for (std::size_t nxt : adj[last]) {
            if (nxt <= path.front()) continue;  // canonical start = smallest
            if (std::find(path.begin(), path.end(), nxt) != path.end()) continue;
            path.push_back(nxt);
            dfs(path);
            path.pop_back();
        }
    };
    for (std::size_t v = 0; v < nverts; ++v) {
        std::vector<std::size_t> path{v};
        dfs(path);
    }
    for (auto& c : cycles) {
        if (c.size() == 4) ++g.square_faces;
        if (c.size() == 5) ++g.pentagon_faces;
    }
    return g;
}

}  // namespace plwb
