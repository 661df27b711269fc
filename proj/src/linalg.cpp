#include "plwb/linalg.hpp"

#include <algorithm>

namespace plwb {

namespace {

struct Echelon {
    std::vector<std::vector<Int>> rows;  // integer rows after elimination
    std::vector<std::size_t> pivot_col;  // per pivot row
    std::size_t cols = 0;
};

// Fraction-free (Bareiss) forward elimination on denominator-cleared rows.
Echelon echelonize(const QMatrix& m) {
    Echelon e;
    if (m.empty()) return e;
    e.cols = m[0].size();
    std::vector<std::vector<Int>> rows;
    for (const auto& r : m) {
        Int lcm = 1;
        for (const auto& x : r) {
            Int l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
            lcm = l;
        }
        std::vector<Int> ir;
        ir.reserve(r.size());
        for (const auto& x : r) {
            Rat s = x * Rat(lcm);
            ir.push_back(s.get_num());
        }
        rows.push_back(std::move(ir));
    }

    Int prev_pivot = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.cols && row < rows.size(); ++col) {
        std::size_t sel = row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[row], rows[sel]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            for (std::size_t c = col + 1; c < e.cols; ++c) {
                Int num = rows[row][col] * rows[r][c] - rows[r][col] * rows[row][c];
                rows[r][c] = num / prev_pivot;  // exact by Bareiss
            }
            rows[r][col] = 0;
        }
        prev_pivot = rows[row][col];
        e.pivot_col.push_back(col);
        ++row;
    }
    rows.resize(row);
    e.rows = std::move(rows);
    return e;
}

}  // namespace

std::size_t rank(const QMatrix& m) { return echelonize(m).pivot_col.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    Echelon e = echelonize(m);
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_col) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(cols, Rat(0));
        v[free_col] = 1;
        // Back-substitute pivots from the bottom up.
        for (std::size_t pr = e.pivot_col.size(); pr-- > 0;) {
            std::size_t pc = e.pivot_col[pr];
            Rat acc(0);
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (e.rows[pr][c] != 0 && v[c] != 0) acc += Rat(e.rows[pr][c]) * v[c];
            v[pc] = -acc / Rat(e.rows[pr][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> span_membership(const QVector& v, const std::vector<QVector>& s) {
    if (s.empty()) {
        for (auto& x : v)
            if (x != 0) return std::nullopt;
        return QVector{};
    }
    std::size_t dim = v.size();
    for (auto& col : s)
        if (col.size() != dim) throw std::domain_error("span_membership: dimension mismatch");

    // Solve A c = v by exact Gauss-Jordan on the augmented matrix (A | v),
    // columns of A being the span vectors.
    std::size_t n = s.size();
    QMatrix aug(dim, QVector(n + 1, Rat(0)));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = s[c][r];
        aug[r][n] = v[r];
    }
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < dim; ++col) {
        std::size_t sel = row;
        while (sel < dim && aug[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(aug[row], aug[sel]);
        Rat piv = aug[row][col];
        for (auto& x : aug[row]) x /= piv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    // Inconsistency check: a zero row of A with nonzero rhs.
    for (std::size_t r = 0; r < dim; ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < n; ++c)
            if (aug[r][c] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero && aug[r][n] != 0) return std::nullopt;
    }
    QVector coeffs(n, Rat(0));
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of_col[c] != SIZE_MAX) coeffs[c] = aug[pivot_of_col[c]][n];
    return coeffs;
}

}  // namespace plwb
