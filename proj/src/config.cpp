#include "plwb/config.hpp"

#include <algorithm>

namespace plwb {

namespace {

Rat det(QMatrix m) {
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

void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& f, std::size_t start) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, cur, f, i + 1);
        cur.pop_back();
    }
}

}  // namespace

namespace {

// Canonical representative of the GL_r-orbit: RREF of the r x (k+1) matrix
// whose columns are the points (left row operations = the GL_r action).
Configuration canonical_rep(const Configuration& c) {
    std::size_t r = c.dim(), m = c.points.size();
    QMatrix a(r, QVector(m, Rat(0)));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < r; ++i) a[i][j] = c.points[j][i];
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < r; ++col) {
        std::size_t sel = row;
        while (sel < r && a[sel][col] == 0) ++sel;
        if (sel == r) continue;
        std::swap(a[row], a[sel]);
        Rat piv = a[row][col];
        for (auto& x : a[row]) x /= piv;
        for (std::size_t rr = 0; rr < r; ++rr) {
            if (rr == row || a[rr][col] == 0) continue;
            Rat f = a[rr][col];
            for (std::size_t cc = 0; cc < m; ++cc) a[rr][cc] -= f * a[row][cc];
        }
        ++row;
    }
    Configuration out;
    for (std::size_t j = 0; j < m; ++j) {
        QVector v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a[i][j];
        out.points.push_back(std::move(v));
    }
    return out;
}

}  // namespace

bool is_generic(const Configuration& c) {
    std::size_t r = c.dim();
    if (r == 0 || c.points.size() < r) return false;
    bool ok = true;
    std::vector<std::size_t> cur;
    subsets(c.points.size(), r, cur,
            [&](const std::vector<std::size_t>& idx) {
                if (!ok) return;
                QMatrix m;
                for (auto i : idx) m.push_back(c.points[i]);
                if (det(std::move(m)) == 0) ok = false;
            },
            0);
    return ok;
}

Configuration make_configuration(std::vector<QVector> pts) {
    Configuration c{std::move(pts)};
    if (!is_generic(c)) throw errors::DuplicatePoints();
    return canonical_rep(c);
}

ConfigChain config_boundary(const Configuration& c) {
    ConfigChain out;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        Configuration sub;
        for (std::size_t j = 0; j < c.points.size(); ++j)
            if (j != i) sub.points.push_back(c.points[j]);
        out.add(canonical_rep(sub), Rat(i % 2 == 0 ? 1 : -1));
    }
    return out;
}

ConfigChain config_boundary(const ConfigChain& c) {
    ConfigChain out;
    for (auto& [cfg, coeff] : c.terms()) {
        ConfigChain b = config_boundary(cfg);
        b *= coeff;
        out += b;
    }
    return out;
}

ConfigChain config_project(const Configuration& c, int pivot_rule) {
    if (c.dim() < 2) throw NonGenericProjection();
    ConfigChain out;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const QVector& a = c.points[i];
        // Pivot coordinate: largest magnitude (ties by index); pivot_rule
        // permutes the choice among nonzero coordinates for invariance tests.
        std::vector<std::size_t> nonzero;
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t] != 0) nonzero.push_back(t);
        if (nonzero.empty()) throw NonGenericProjection();
        std::size_t pivot = nonzero[0];
        for (auto t : nonzero)
            if (abs(a[t]) > abs(a[pivot])) pivot = t;
        if (pivot_rule != 0)
            pivot = nonzero[std::size_t(pivot_rule) % nonzero.size()];

        Configuration proj;
        for (std::size_t j = 0; j < c.points.size(); ++j) {
            if (j == i) continue;
            const QVector& b = c.points[j];
            Rat f = b[pivot] / a[pivot];
            QVector img;
            for (std::size_t t = 0; t < b.size(); ++t)
                if (t != pivot) img.push_back(b[t] - f * a[t]);
            proj.points.push_back(std::move(img));
        }
        if (!is_generic(proj)) throw NonGenericProjection();
        out.add(canonical_rep(proj), Rat(i % 2 == 0 ? 1 : -1));
    }
    return out;
}

ConfigChain config_project(const ConfigChain& c, int pivot_rule) {
    ConfigChain out;
    for (auto& [cfg, coeff] : c.terms()) {
        ConfigChain b = config_project(cfg, pivot_rule);
        b *= coeff;
        out += b;
    }
    return out;
}

}  // namespace plwb
