#include "plwb/periods.hpp"

namespace plwb {

namespace {

Cplx czero(long prec) { return Cplx(Real(prec), Real(prec)); }
Cplx cone(long prec) { return Cplx(Real::of_long(1, prec), Real(prec)); }

std::vector<std::vector<Cplx>> mat_mul(const std::vector<std::vector<Cplx>>& a,
                                       const std::vector<std::vector<Cplx>>& b, long prec) {
    std::size_t n = a.size();
    std::vector<std::vector<Cplx>> r(n, std::vector<Cplx>(n, czero(prec)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Inverse of an upper-triangular complex matrix by back substitution.
std::vector<std::vector<Cplx>> ut_inverse(const std::vector<std::vector<Cplx>>& a, long prec) {
    std::size_t n = a.size();
    std::vector<std::vector<Cplx>> inv(n, std::vector<Cplx>(n, czero(prec)));
    for (std::size_t j = 0; j < n; ++j) {
        inv[j][j] = cone(prec) / a[j][j];
        for (std::size_t i = j; i-- > 0;) {
            Cplx acc = czero(prec);
            for (std::size_t k = i + 1; k <= j; ++k) acc += a[i][k] * inv[k][j];
            inv[i][j] = -acc / a[i][i];
        }
    }
    return inv;
}

}  // namespace

PeriodMatrix period_matrix(int n, const Cplx& z, Precision p) {
    if (n < 1) throw std::domain_error("period_matrix: n >= 1");
    long prec = p.bits + 64;
    if (z.is_zero()) throw std::domain_error("period_matrix: z != 0");
    bool z_is_one = z.im.is_zero() && z.re == Real::of_long(1, prec);

    PeriodMatrix pm;
    pm.n = n;
    pm.m.assign(n + 1, std::vector<Cplx>(n + 1, czero(prec)));
    pm.m[0][0] = cone(prec);
    for (int k = 1; k <= n; ++k)
        pm.m[0][k] = (k == 1 && z_is_one) ? czero(prec) : li_n(k, z, p, Branch::Above);

    Cplx two_pi_i(Real(prec), Real::pi(prec) * Real::of_long(2, prec));
    Cplx lz = z_is_one ? czero(prec) : log(z);
    for (int j = 1; j <= n; ++j) {
        Cplx diag = cone(prec);
        for (int t = 0; t < j; ++t) diag = diag * two_pi_i;
        Cplx entry = diag;
        Rat fact(1);
        for (int k = j; k <= n; ++k) {
            if (k > j) {
                fact *= Rat(k - j);
                entry = entry * lz;
            }
            pm.m[j][k] = entry * Cplx::of_real(Real::of_rat(Rat(1) / fact, prec));
        }
    }
    return pm;
}

PeriodMatrix kummer_matrix(const Cplx& z, Precision p) {
    long prec = p.bits + 64;
    PeriodMatrix pm;
    pm.n = 1;
    pm.m.assign(2, std::vector<Cplx>(2, czero(prec)));
    pm.m[0][0] = cone(prec);
    pm.m[0][1] = log(z);
    pm.m[1][1] = Cplx(Real(prec), Real::pi(prec) * Real::of_long(2, prec));
    return pm;
}

Real hodge_pairing(const PeriodMatrix& pm, int n, Precision p) {
    long prec = p.bits + 64;
    std::size_t dim = pm.m.size();
    if (n < 0 || std::size_t(n) >= dim) throw std::domain_error("hodge_pairing: bad weight index");

    // D * conj(P)^{-1} * P with D = diag((-1)^k).
    std::vector<std::vector<Cplx>> pbar(dim, std::vector<Cplx>(dim, czero(prec)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) pbar[i][j] = conj(pm.m[i][j]);
    auto u = mat_mul(ut_inverse(pbar, prec), pm.m, prec);
    for (std::size_t i = 0; i < dim; ++i)
        if (i % 2 == 1)
            for (std::size_t j = 0; j < dim; ++j) u[i][j] = -u[i][j];

    // Defensive unipotence check.
    for (std::size_t i = 0; i < dim; ++i) {
        Cplx d = u[i][i] - cone(prec);
        if (std::max(d.re.log2_abs(), d.im.log2_abs()) > double(-(p.bits / 2))) throw NonUnipotent();
        for (std::size_t j = 0; j < i; ++j)
            if (std::max(u[i][j].re.log2_abs(), u[i][j].im.log2_abs()) > double(-(p.bits / 2)))
                throw NonUnipotent();
    }

    // log of the unipotent matrix: finite series log(1+N) = sum (-1)^{m+1} N^m / m.
    std::vector<std::vector<Cplx>> nil = u;
    for (std::size_t i = 0; i < dim; ++i) nil[i][i] -= cone(prec);
    std::vector<std::vector<Cplx>> power = nil;
    std::vector<std::vector<Cplx>> lg(dim, std::vector<Cplx>(dim, czero(prec)));
    for (std::size_t m = 1; m < dim; ++m) {
        Rat c = Rat((m % 2) ? 1 : -1, long(m));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                lg[i][j] += power[i][j] * Cplx::of_real(Real::of_rat(c, prec));
        if (m + 1 < dim) power = mat_mul(power, nil, prec);
    }
    Cplx entry = lg[0][std::size_t(n)] * Cplx::of_real(Real::of_rat(Rat(1, 2), prec));
    return n % 2 == 1 ? entry.re : entry.im;
}

std::pair<Rat, Real> rationalize(const Real& x, const Int& maxden, Precision p) {
    if (maxden < 1) throw std::domain_error("rationalize: maxden >= 1");
    long prec = std::max<long>(x.prec(), p.bits + 64);
    // Continued fraction with convergent recurrences.
    Int p0(1), q0(0);  // p_{-1}/q_{-1}
    Int p1, q1(1);     // p_0/q_0 = floor(x)
    Real t = x;
    p1 = t.floor_int();
    Real frac = t - Real::of_int(p1, prec);
    Rat best(p1, 1);
    for (int it = 0; it < 4 * int(prec); ++it) {
        if (frac.is_zero()) break;
        t = Real::of_long(1, prec) / frac;
        Int a = t.floor_int();
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        best = Rat(p1, q1);
        best.canonicalize();
        frac = t - Real::of_int(a, prec);
    }
    Real residual = abs(x - Real::of_rat(best, prec));
    return {best, residual};
}

}  // namespace plwb
