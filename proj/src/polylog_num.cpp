#include "plwb/polylog_num.hpp"

#include <algorithm>
#include <cmath>

namespace plwb {

namespace {

bool on_cut(int n, const Cplx& z) {
    if (!z.im.is_zero()) return false;
    Real one = Real::of_long(1, z.prec());
    if (n == 1) return !(z.re < one);
    return z.re > one;
}

Cplx cplx_zero(long prec) { return Cplx(Real(prec), Real(prec)); }

Cplx i_pow(int k, long prec) {
    Cplx r(Real::of_long(1, prec), Real(prec));
    k = ((k % 4) + 4) % 4;
    Real one = Real::of_long(1, prec), zero(prec);
    switch (k) {
        case 0: return {one, zero};
        case 1: return {zero, one};
        case 2: return {-one, zero};
        default: return {zero, -one};
    }
    return r;
}

// Direct series sum_{k>=1} z^k / k^n for |z| <= rho < 1.
Cplx li_series(int n, const Cplx& z, long prec, long target_exp) {
    Cplx acc = cplx_zero(prec);
    Cplx zpow(Real::of_long(1, prec), Real(prec));
    double lz = abs(z).log2_abs();
    long kmax = lz < -0.01 ? long(double(-target_exp) / -lz) + 8 : 1 << 24;
    for (long k = 1; k <= kmax; ++k) {
        zpow = zpow * z;
        Cplx term = zpow / Cplx::of_real(pow_si(Real::of_long(k, prec), n));
        acc += term;
    }
    return acc;
}

// Principal log of (-w), except that exactly-negative-real results take the
// lower determination (the z + i0 limit convention for cut arguments).
Cplx log_neg_above(const Cplx& w, long prec) {
    if (w.im.is_zero() && w.re.sgn() > 0) {
        return {log(w.re), -Real::pi(prec)};
    }
    return log(-w);
}

// Expansion at z = 1 in mu = log z, valid for |mu| < 2*pi:
//   Li_n(z) = sum_{k>=0, k!=n-1} zeta(n-k) mu^k/k!  +  (H_{n-1} - log(-mu)) mu^{n-1}/(n-1)!
Cplx li_log_expansion(int n, const Cplx& z, long prec, long target_exp, Precision p) {
    Cplx mu = log(z);
    Cplx acc = cplx_zero(prec);
    Cplx mupow(Real::of_long(1, prec), Real(prec));  // mu^k / k!
    double last_nonzero = 1e300, second_last = 1e300;
    for (long k = 0; k < 8 * (-target_exp) + 64; ++k) {
        if (k > 0) mupow = mupow * mu * Cplx::of_real(pow_si(Real::of_long(k, prec), -1));
        if (k == n - 1) {
            Rat h(0);
            for (long j = 1; j <= n - 1; ++j) h += Rat(1, j);
            Cplx special = (Cplx::of_real(Real::of_rat(h, prec)) - log_neg_above(mu, prec)) * mupow;
            acc += special;
            continue;
        }
        long m = n - k;
        bool zero_term = false;
        Cplx term = cplx_zero(prec);
        if (m >= 2) {
            term = mupow * Cplx::of_real(zeta_value(m, p));
        } else if (m == 0) {
            term = mupow * Cplx::of_real(Real::of_rat(Rat(-1, 2), prec));
        } else if (m < 0) {
            // zeta(-j) = -B_{j+1}/(j+1), nonzero only for odd j
            long j = -m;
            if (j % 2 == 1) {
                Rat c = -bernoulli(unsigned(j + 1)) / Rat(j + 1);
                term = mupow * Cplx::of_real(Real::of_rat(c, prec));
            } else {
                zero_term = true;
            }
        }
        acc += term;
        if (!zero_term) {
            second_last = last_nonzero;
            last_nonzero = std::max(term.re.log2_abs(), term.im.log2_abs());
        }
        // The nonzero terms are eventually geometric with ratio (|mu|/2pi)^2;
        // stop once two consecutive nonzero terms sit safely below target.
        if (k > n + 6 && last_nonzero < double(target_exp) - 6 &&
            second_last < double(target_exp) - 6)
            break;
    }
    return acc;
}

Cplx bernoulli_poly_eval(unsigned n, const Cplx& x, long prec) {
    auto coeffs = bernoulli_poly(n);
    Cplx acc = cplx_zero(prec);
    for (auto& c : coeffs) acc = acc * x + Cplx::of_real(Real::of_rat(c, prec));
    return acc;
}

}  // namespace

Cplx li_n(int n, const Cplx& z, Precision p, Branch branch) {
    if (n < 1) throw std::domain_error("li_n: n >= 1");
    long prec = p.bits + 64;
    long target_exp = -(p.bits + 32);
    if (on_cut(n, z) && branch == Branch::Strict) throw OnBranchCut();

    if (n == 1) {
        if (z.im.is_zero() && z.re == Real::of_long(1, prec)) throw OnBranchCut();
        Cplx one(Real::of_long(1, prec), Real(prec));
        Cplx w = one - z;
        if (w.im.is_zero() && w.re.sgn() < 0)  // z real > 1: the z + i0 limit
            return -Cplx(log(-w.re), -Real::pi(prec));
        return -log(w);
    }
    Real a = abs(z);
    double mag = a.to_double();
    if (z.is_zero()) return cplx_zero(prec);
    if (z.im.is_zero() && z.re == Real::of_long(1, prec))
        return Cplx::of_real(zeta_value(n, p));
    if (mag <= 0.75) return li_series(n, z, prec, target_exp);
    if (mag < 1.4) return li_log_expansion(n, z, prec, target_exp, p);

    // Inversion: Li_n(z) = -(-1)^n Li_n(1/z) - (2 pi i)^n / n! B_n(1/2 + log(-z)/(2 pi i))
    Cplx one(Real::of_long(1, prec), Real(prec));
    Cplx inv = one / z;
    Cplx li_inv = abs(inv).to_double() <= 0.75 ? li_series(n, inv, prec, target_exp)
                                               : li_log_expansion(n, inv, prec, target_exp, p);
    Real two_pi = Real::pi(prec) * Real::of_long(2, prec);
    Cplx two_pi_i = Cplx(Real(prec), two_pi);
    Cplx w = log_neg_above(z, prec) / two_pi_i;
    Cplx barg = Cplx(Real::of_rat(Rat(1, 2), prec), Real(prec)) + w;
    Cplx bval = bernoulli_poly_eval(unsigned(n), barg, prec);
    Rat nfact(1);
    for (int j = 2; j <= n; ++j) nfact *= Rat(j);
    Cplx pref = Cplx::of_real(pow_si(two_pi, n)) * i_pow(n, prec) *
                Cplx::of_real(Real::of_rat(Rat(1) / nfact, prec));
    Cplx result = -bval * pref - (n % 2 == 0 ? li_inv : -li_inv);
    return result;
}

namespace {

using Series = std::vector<Cplx>;  // truncated Taylor coefficients

Series series_mul(const Series& a, const Series& b, std::size_t m, long prec) {
    Series r(m, cplx_zero(prec));
    for (std::size_t i = 0; i < a.size() && i < m; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < m; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Cplx series_eval(const Series& s, const Cplx& h) {
    Cplx acc = cplx_zero(h.prec());
    for (std::size_t i = s.size(); i-- > 0;) acc = acc * h + s[i];
    return acc;
}

}  // namespace

std::vector<Cplx> li_stack_ode(int n, const Cplx& z, Precision p,
                               const std::vector<Cplx>& waypoints) {
    long prec = p.bits + 64;
    long target_exp = -(p.bits + 32);
    if (on_cut(n, z) || z.is_zero()) throw OnBranchCut();

    // Seed on the series disc along the direction of the first leg.
    Cplx first = waypoints.empty() ? z : waypoints.front();
    Real fa = abs(first);
    Cplx seed = fa.to_double() <= 0.4
                    ? first
                    : first * Cplx::of_real(Real::of_double(0.4, prec) / fa);
    std::vector<Cplx> stack(n + 1, cplx_zero(prec));
    {
        Cplx one(Real::of_long(1, prec), Real(prec));
        stack[0] = seed / (one - seed);
        for (int k = 1; k <= n; ++k) stack[k] = li_series(k, seed, prec, target_exp);
    }

    std::vector<Cplx> path;
    path.push_back(seed);
    for (auto& w : waypoints) path.push_back(w);
    if (waypoints.empty() || !(abs(waypoints.back() - z).is_zero())) path.push_back(z);

    std::size_t order = std::size_t(p.bits / 3) + 24;
    Cplx pos = path.front();
    for (std::size_t leg = 1; leg < path.size(); ++leg) {
        Cplx target = path[leg];
        while (true) {
            Cplx delta = target - pos;
            Real dist = abs(delta);
            if (dist.log2_abs() < double(target_exp)) break;
            Cplx one(Real::of_long(1, prec), Real(prec));
            Real radius = std::min(abs(pos), abs(pos - one));
            if (radius.sgn() <= 0) throw OnBranchCut();
            // Step at most radius/8 toward the target.
            Real max_step = radius * Real::of_rat(Rat(1, 8), prec);
            Cplx h = delta;
            if (max_step < dist) h = delta * Cplx::of_real(max_step / dist);

            // Taylor coefficients at pos: inv_z = 1/(pos+t), s[k] = Li_k(pos+t).
            Series inv_z(order, cplx_zero(prec));
            {
                Cplx ipos = one / pos;
                Cplx c = ipos;
                for (std::size_t m = 0; m < order; ++m) {
                    inv_z[m] = c;
                    c = -c * ipos;
                }
            }
            std::vector<Series> s(n + 1);
            s[0].assign(order, cplx_zero(prec));
            {
                // Li_0 = -1 + 1/(1-z); 1/(1-pos-t) = sum t^m / (1-pos)^{m+1}
                Cplx ib = one / (one - pos);
                Cplx c = ib;
                for (std::size_t m = 0; m < order; ++m) {
                    s[0][m] = c;
                    c = c * ib;
                }
                s[0][0] -= one;
            }
            for (int k = 1; k <= n; ++k) {
                Series deriv = series_mul(s[k - 1], inv_z, order - 1, prec);
                s[k].assign(order, cplx_zero(prec));
                s[k][0] = stack[k];
                for (std::size_t m = 0; m + 1 < order; ++m)
                    s[k][m + 1] =
                        deriv[m] * Cplx::of_real(pow_si(Real::of_long(long(m + 1), prec), -1));
            }
            pos = pos + h;
            stack[0] = pos / (one - pos);
            for (int k = 1; k <= n; ++k) stack[k] = series_eval(s[k], h);
        }
    }
    return stack;
}

Cplx li_n_ode(int n, const Cplx& z, Precision p, const std::vector<Cplx>& waypoints) {
    return li_stack_ode(n, z, p, waypoints)[n];
}

Cplx li_multi(const std::vector<long>& ns, const std::vector<Cplx>& zs, Precision p) {
    if (ns.size() != zs.size() || ns.empty()) throw std::domain_error("li_multi: shape mismatch");
    long prec = p.bits + 64;
    long r = long(ns.size());
    // Convergence check: prod_{j>=i} |z_j| <= 0.9 for all i.
    double worst = 0;
    for (long i = 0; i < r; ++i) {
        double prodmag = 0;
        for (long j = i; j < r; ++j) prodmag += abs(zs[j]).log2_abs();
        worst = std::max(worst, std::exp2(prodmag));
    }
    if (worst > 0.9) throw OutsideConvergenceDomain();

    long kmax = long(double(p.bits + 48) * 0.6931 / -std::log(worst)) + 8 * r + 32;

    // G_i(m) = sum_{k=m}^{K} z_i^k / k^{n_i} * G_{i+1}(k+1), computed from the top.
    std::vector<Cplx> g(kmax + 2, cplx_zero(prec));
    for (long i = r - 1; i >= 0; --i) {
        std::vector<Cplx> next(kmax + 2, cplx_zero(prec));
        Cplx zpow(Real::of_long(1, prec), Real(prec));
        std::vector<Cplx> zpows(kmax + 1, cplx_zero(prec));
        for (long k = 1; k <= kmax; ++k) {
            zpow = zpow * zs[i];
            zpows[k] = zpow;
        }
        for (long m = kmax; m >= 1; --m) {
            Cplx term = zpows[m] * Cplx::of_real(pow_si(Real::of_long(m, prec), -ns[i]));
            if (i + 1 < r) term = term * g[m + 1];
            next[m] = next[m + 1] + term;
        }
        g = std::move(next);
    }
    return g[1];
}

Real p_n(int n, const Cplx& z, Precision p) {
    if (n < 1) throw std::domain_error("p_n: n >= 1");
    long prec = p.bits + 64;
    if (z.is_zero()) return Real(prec);

    auto project = [&](const Cplx& v) { return n % 2 == 1 ? v.re : v.im; };

    if (z.im.is_zero() && z.re == Real::of_long(1, prec)) {
        // P_n(1): log|1| = 0 kills every k >= 1 term.
        if (n == 1) throw OnBranchCut();
        return project(Cplx::of_real(zeta_value(n, p)));
    }
    if (n == 1) {
        Cplx one(Real::of_long(1, prec), Real(prec));
        return -log(abs(one - z));
    }

    Real lg = log(abs(z));
    Cplx acc = Cplx(Real(prec), Real(prec));
    Real lgpow = Real::of_long(1, prec);
    for (int k = 0; k <= n - 1; ++k) {
        if (k > 0) {
            if (lg.is_zero()) break;
            lgpow = lgpow * lg;
        }
        Rat c = bernoulli(unsigned(k));
        if (c == 0 && k > 0) continue;
        c *= Rat(Int(1) << k);
        Rat kfact(1);
        for (int j = 2; j <= k; ++j) kfact *= Rat(j);
        c /= kfact;
        Cplx term = li_n(n - k, z, p, Branch::Above) * Cplx::of_real(Real::of_rat(c, prec) * lgpow);
        acc += term;
    }
    return project(acc);
}

}  // namespace plwb
