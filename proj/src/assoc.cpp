#include "plwb/assoc.hpp"

#include <algorithm>
#include <functional>

namespace plwb {

bool diagonals_cross(const Diagonal& a, const Diagonal& b) {
    auto inside = [](int x, const Diagonal& d) { return d.first < x && x < d.second; };
    return inside(b.first, a) != inside(b.second, a) && b.first != a.first &&
           b.first != a.second && b.second != a.first && b.second != a.second;
}

bool is_valid_diagonal(int n, const Diagonal& d) {
    if (d.first < 1 || d.second > n || d.first >= d.second) return false;
    if (d.second - d.first < 2) return false;
    if (d.first == 1 && d.second == n) return false;
    return true;
}

std::vector<Diagonal> polygon_diagonals(int n) {
    std::vector<Diagonal> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) out.push_back({i, j});
    return out;
}

namespace {

void enumerate_rec(const std::vector<Diagonal>& all, std::size_t start, Dissection& cur,
                   std::vector<std::vector<Dissection>>& out) {
    out[cur.diagonals.size()].push_back(cur);
    for (std::size_t i = start; i < all.size(); ++i) {
        bool ok = true;
        for (auto& d : cur.diagonals)
            if (diagonals_cross(d, all[i])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.diagonals.insert(all[i]);
        enumerate_rec(all, i + 1, cur, out);
        cur.diagonals.erase(all[i]);
    }
}

}  // namespace

std::vector<std::vector<Dissection>> all_dissections(int n) {
    std::vector<std::vector<Dissection>> out(std::size_t(n - 2));
    auto all = polygon_diagonals(n);
    Dissection cur;
    cur.n = n;
    enumerate_rec(all, 0, cur, out);
    return out;
}

std::vector<Dissection> enumerate_dissections(int n, int k) {
    if (n < 3 || n > 12 || k < 0 || k > n - 3) return {};
    return all_dissections(n)[std::size_t(k)];
}

std::vector<std::vector<int>> operadic_split(const Dissection& d) {
    std::vector<std::vector<int>> cells;
    std::vector<int> whole;
    for (int i = 1; i <= d.n; ++i) whole.push_back(i);
    std::vector<std::pair<std::vector<int>, std::set<Diagonal>>> stack{{whole, d.diagonals}};
    while (!stack.empty()) {
        auto [verts, diags] = stack.back();
        stack.pop_back();
        if (diags.empty()) {
            cells.push_back(verts);
            continue;
        }
        Diagonal cut = *diags.begin();
        auto pos = [&](int v) {
            return std::size_t(std::find(verts.begin(), verts.end(), v) - verts.begin());
        };
        std::size_t a = pos(cut.first), b = pos(cut.second);
        if (a > b) std::swap(a, b);
        std::vector<int> left(verts.begin() + long(a), verts.begin() + long(b) + 1);
        std::vector<int> right(verts.begin() + long(b), verts.end());
        right.insert(right.end(), verts.begin(), verts.begin() + long(a) + 1);
        auto side_diags = [&](const std::vector<int>& side) {
            std::set<int> in(side.begin(), side.end());
            std::set<Diagonal> sub;
            for (auto& dg : diags)
                if (dg != cut && in.count(dg.first) && in.count(dg.second)) sub.insert(dg);
            return sub;
        };
        stack.push_back({left, side_diags(left)});
        stack.push_back({right, side_diags(right)});
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Diagonal> addable_diagonals(const Dissection& d) {
    std::vector<Diagonal> out;
    for (auto& cand : polygon_diagonals(d.n)) {
        if (d.diagonals.count(cand)) continue;
        bool ok = true;
        for (auto& e : d.diagonals)
            if (diagonals_cross(e, cand)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(cand);
    }
    return out;
}

std::vector<Dissection> refinements(const Dissection& d) {
    std::vector<Dissection> out;
    Dissection cur = d;
    std::vector<Diagonal> addable = addable_diagonals(d);
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.is_triangulation()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < addable.size(); ++i) {
            bool ok = true;
            for (auto& e : cur.diagonals)
                if (diagonals_cross(e, addable[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.diagonals.insert(addable[i]);
            rec(i + 1);
            cur.diagonals.erase(addable[i]);
        }
    };
    rec(0);
    return out;
}

QVector loday_vertex(const Dissection& t) {
    if (!t.is_triangulation()) throw std::domain_error("loday_vertex: needs a triangulation");
    int n = t.n;
    // Vertices 0..n-1; each inner vertex i in 1..n-2 is the middle vertex of a
    // unique triangle (p,i,q), p < i < q; its coordinate is (i-p)(q-i).
    QVector coord(std::size_t(n - 2), Rat(0));
    for (auto& tri : operadic_split(t)) {
        std::vector<int> v = {tri[0] - 1, tri[1] - 1, tri[2] - 1};
        std::sort(v.begin(), v.end());
        int p = v[0], i = v[1], q = v[2];
        coord[std::size_t(i - 1)] = Rat(long(i - p) * long(q - i));
    }
    return coord;
}

namespace {

QVector barycenter(const std::vector<QVector>& pts) {
    QVector b(pts[0].size(), Rat(0));
    for (auto& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) b[i] += p[i];
    for (auto& x : b) x /= Rat(long(pts.size()));
    return b;
}

// First deg linearly independent edge vectors from the lex-min vertex, in
// sorted-vertex order: the reference orientation of the face.
std::vector<QVector> face_basis(const std::vector<QVector>& verts, std::size_t deg) {
    std::vector<QVector> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<QVector> basis;
    QMatrix probe;
    for (std::size_t i = 1; i < sorted.size() && basis.size() < deg; ++i) {
        QVector e(sorted[i].size());
        for (std::size_t c = 0; c < e.size(); ++c) e[c] = sorted[i][c] - sorted[0][c];
        probe.push_back(e);
        if (rank(probe) == probe.size())
            basis.push_back(e);
        else
            probe.pop_back();
    }
    if (basis.size() != deg) throw std::domain_error("face_basis: degenerate face");
    return basis;
}

QVector solve_in_basis(const std::vector<QVector>& basis, const QVector& vec) {
    auto coeffs = span_membership(vec, basis);
    if (!coeffs) throw std::domain_error("solve_in_basis: vector outside the span");
    return *coeffs;
}

Rat det_q(QMatrix m) {
    std::size_t n = m.size();
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

std::vector<QVector> face_vertices(const Dissection& d) {
    std::vector<QVector> out;
    for (auto& t : refinements(d)) out.push_back(loday_vertex(t));
    return out;
}

}  // namespace

int incidence_sign(const Dissection& d, const Diagonal& extra) {
    Dissection facet = d;
    facet.diagonals.insert(extra);
    std::size_t deg = std::size_t(d.degree());
    auto verts_f = face_vertices(d);
    auto verts_g = face_vertices(facet);
    auto basis_f = face_basis(verts_f, deg);
    QVector w = barycenter(verts_g);
    QVector bf = barycenter(verts_f);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= bf[i];

    QMatrix m;
    m.push_back(solve_in_basis(basis_f, w));
    if (deg > 1) {
        auto basis_g = face_basis(verts_g, deg - 1);
        for (auto& e : basis_g) m.push_back(solve_in_basis(basis_f, e));
    }
    Rat det = det_q(std::move(m));
    if (det == 0) throw std::domain_error("incidence_sign: degenerate");
    return sgn(det);
}

ChainA boundary(const Dissection& d) {
    ChainA out;
    if (d.degree() == 0) return out;
    for (auto& extra : addable_diagonals(d)) {
        Dissection facet = d;
        facet.diagonals.insert(extra);
        out.add(facet, Rat(incidence_sign(d, extra)));
    }
    return out;
}

ChainA boundary(const ChainA& c) {
    ChainA out;
    for (auto& [d, coeff] : c.terms()) {
        ChainA b = boundary(d);
        b *= coeff;
        out += b;
    }
    return out;
}

Dissection flip(const Dissection& t, const Diagonal& d) {
    if (!t.is_triangulation() || !t.diagonals.count(d))
        throw std::domain_error("flip: needs a triangulation containing the diagonal");
    Dissection base = t;
    base.diagonals.erase(d);
    for (auto& cand : addable_diagonals(base)) {
        if (cand == d) continue;
        Dissection other = base;
        other.diagonals.insert(cand);
        if (other.is_triangulation()) return other;
    }
    throw std::domain_error("flip: no complementary diagonal");
}

FaceCensus face_census(int n) {
    FaceCensus out;
    auto all = all_dissections(n);
    out.by_degree.assign(std::size_t(n - 2), 0);
    for (auto& level : all)
        for (auto& d : level) {
            out.by_degree[std::size_t(d.degree())] += 1;
            if (d.degree() != 2) continue;
            std::size_t quads = 0, pents = 0;
            for (auto& cell : operadic_split(d)) {
                if (cell.size() == 4) ++quads;
                if (cell.size() == 5) ++pents;
            }
            if (pents == 1 && quads == 0) ++out.pentagons;
            if (quads == 2) ++out.squares;
        }
    return out;
}

}  // namespace plwb
