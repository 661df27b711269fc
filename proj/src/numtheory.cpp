#include "plwb/numtheory.hpp"

#include <mutex>

namespace plwb {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache;  // guarded by bernoulli_mutex
}  // namespace

Rat bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) bernoulli_cache.push_back(Rat(1));
    while (bernoulli_cache.size() <= k) {
        unsigned m = bernoulli_cache.size();
        // sum_{j=0}^{m} C(m+1,j) B_j = 0
        Rat acc(0);
        Int c(1);  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += Rat(c) * bernoulli_cache[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        // c is now C(m+1, m) = m+1
        bernoulli_cache.push_back(-acc / Rat(c));
    }
    return bernoulli_cache[k];
}

std::vector<Rat> bernoulli_poly(unsigned n) {
    // B_n(x) = sum_k C(n,k) B_k x^{n-k}; coefficients returned from x^n down to x^0.
    std::vector<Rat> coeffs(n + 1);
    Int c(1);
    for (unsigned k = 0; k <= n; ++k) {
        coeffs[k] = Rat(c) * bernoulli(k);
        if (k < n) c = c * (n - k) / (k + 1);
    }
    return coeffs;
}

namespace {

int jacobi_odd(Int a, Int n) {
    // n odd positive
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

}  // namespace

int kronecker_symbol(const Int& a_in, const Int& n_in) {
    Int a = a_in, n = n_in;
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int e = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e;
    }
    int two_part = 1;
    if (e > 0) {
        if (a % 2 == 0) return 0;
        long r = mpz_fdiv_ui(a.get_mpz_t(), 8);
        int s = (r == 1 || r == 7) ? 1 : -1;
        two_part = (e % 2 == 0) ? 1 : s;
    }
    return sign * two_part * jacobi_odd(a, n);
}

bool is_fundamental_discriminant(long d) {
    if (d == 1 || d == 0) return false;
    auto squarefree = [](long m) {
        if (m < 0) m = -m;
        if (m == 0) return false;
        for (auto& [p, e] : factor_integer(Int(m)))
            if (e > 1) return false;
        return true;
    };
    long mod4 = ((d % 4) + 4) % 4;
    if (mod4 == 1) return squarefree(d);
    if (mod4 == 0) {
        long m = d / 4;
        long m4 = ((m % 4) + 4) % 4;
        return (m4 == 2 || m4 == 3) && squarefree(m);
    }
    return false;
}

namespace {

// Euler-Maclaurin tail sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}.
// Returns false when the requested accuracy was not reached before terms
// start growing (caller then retries with larger N).
bool em_tail(long s, const Real& base_inv, const Real& first_power, Real& out, long target_exp) {
    long prec = first_power.prec();
    Real term_power = first_power;  // (N+a)^{-s-2j+1}, starts at j=1
    // rising factorial (s)_{2j-1}, maintained incrementally
    Rat rising(1);
    long idx = 0;  // next factor is (s + idx)
    double prev_mag = 1e300;
    Real acc = Real::of_long(0, prec);
    for (long j = 1; j < 4096; ++j) {
        while (idx < 2 * j - 1) {
            rising *= Rat(s + idx);
            ++idx;
        }
        Rat coeff = bernoulli(unsigned(2 * j)) * rising;
        // divide by (2j)!
        static std::mutex fact_mutex;
        static std::vector<Rat> fact{Rat(1)};
        {
            std::lock_guard<std::mutex> lock(fact_mutex);
            while (fact.size() <= unsigned(2 * j)) fact.push_back(fact.back() * Rat(long(fact.size())));
            coeff /= fact[unsigned(2 * j)];
        }
        Real term = Real::of_rat(coeff, prec) * term_power;
        acc += term;
        double mag = term.log2_abs();
        if (mag < double(target_exp)) {
            out = acc;
            return true;
        }
        if (mag > prev_mag) return false;  // divergent asymptotic range reached
        prev_mag = mag;
        term_power = term_power * base_inv * base_inv;
    }
    return false;
}

}  // namespace

Real hurwitz_zeta(long n, const Rat& a, Precision p) {
    if (n < 2) throw std::domain_error("hurwitz_zeta: needs n >= 2");
    if (a <= 0 || a > 1) throw std::domain_error("hurwitz_zeta: a must be in (0,1]");
    long prec = p.bits + 64;
    long target_exp = -(p.bits + 32);

    long N = std::max<long>(16, long(0.30 * double(p.bits)));
    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        Real sum = Real::of_long(0, prec);
        for (long k = 0; k < N; ++k) {
            Rat kk = Rat(k) + a;
            Real t = Real::of_rat(kk, prec);
            sum += pow_si(t, -n);
        }
        Real base = Real::of_rat(Rat(N) + a, prec);
        Real base_inv = pow_si(base, -1);
        // (N+a)^{1-n}/(n-1) + (N+a)^{-n}/2
        sum += pow_si(base, 1 - n) / Real::of_long(n - 1, prec);
        sum += pow_si(base, -n) / Real::of_long(2, prec);
        Real tail(prec);
        if (em_tail(n, base_inv, pow_si(base, -n - 1), tail, target_exp)) {
            return sum + tail;
        }
    }
    throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin did not converge");
}

Real zeta_value(long n, Precision p) { return hurwitz_zeta(n, Rat(1), p); }

Real digamma(const Rat& x, Precision p) {
    if (x <= 0) throw std::domain_error("digamma: needs x > 0");
    long prec = p.bits + 64;
    long target_exp = -(p.bits + 32);

    long N = std::max<long>(16, long(0.30 * double(p.bits)));
    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        Real sum = Real::of_long(0, prec);
        for (long k = 0; k < N; ++k) sum -= Real::of_rat(Rat(1) / (x + k), prec);
        Real y = Real::of_rat(x + N, prec);
        sum += log(y);
        sum -= pow_si(y, -1) / Real::of_long(2, prec);
        // tail: -sum_{j>=1} B_{2j}/(2j) y^{-2j}
        Real acc = Real::of_long(0, prec);
        Real ypow = pow_si(y, -2);
        bool ok = false;
        double prev_mag = 1e300;
        for (long j = 1; j < 4096; ++j) {
            Rat c = bernoulli(unsigned(2 * j)) / Rat(2 * j);
            Real term = Real::of_rat(c, prec) * ypow;
            acc -= term;
            double mag = term.log2_abs();
            if (mag < double(target_exp)) {
                ok = true;
                break;
            }
            if (mag > prev_mag) break;
            prev_mag = mag;
            ypow = ypow * pow_si(y, -2);
        }
        if (ok) return sum + acc;
    }
    throw std::runtime_error("digamma: Euler-Maclaurin did not converge");
}

Real dirichlet_L(long n, long D, Precision p) {
    if (!is_fundamental_discriminant(D) && D != 1)
        throw NonFundamentalDiscriminant();
    long prec = p.bits + 64;
    long q = D < 0 ? -D : D;
    Real sum = Real::of_long(0, prec);
    if (n >= 2) {
        for (long a = 1; a <= q; ++a) {
            int chi = kronecker_symbol(D, a);
            if (chi == 0) continue;
            Real z = hurwitz_zeta(n, Rat(a, q), p);
            sum += (chi > 0) ? z : -z;
        }
        return sum * pow_si(Real::of_long(q, prec), -n);
    }
    if (n == 1) {
        if (D == 1) throw std::domain_error("dirichlet_L: L(1) diverges for the trivial character");
        for (long a = 1; a <= q; ++a) {
            int chi = kronecker_symbol(D, a);
            if (chi == 0) continue;
            Real d = digamma(Rat(a, q), p);
            sum += (chi > 0) ? d : -d;
        }
        return -sum / Real::of_long(q, prec);
    }
    throw std::domain_error("dirichlet_L: n must be >= 1");
}

}  // namespace plwb
