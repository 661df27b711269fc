#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "plwb/rat.hpp"

namespace plwb {

/// Working precision in bits (>= 64). Numeric routines take the requested
/// precision and add their own guard bits internally.
struct Precision {
    long bits;
    explicit Precision(long b) : bits(b) {
        if (b < 64) throw std::domain_error("Precision: needs >= 64 bits");
    }
    /// The documented per-operation error budget 2^{-(bits-16)}.
    double budget_exponent() const { return double(-(bits - 16)); }
};

/// Arbitrary-precision binary float (RAII over mpfr_t). Binary operations
/// compute at the larger operand precision.
class Real {
  public:
    explicit Real(long prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, 64);
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    static Real of_long(long v, long prec) {
        Real r(prec);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }
    static Real of_rat(const Rat& q, long prec) {
        Real r(prec);
        mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of_int(const Int& z, long prec) {
        Real r(prec);
        mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of_double(double v, long prec) {
        Real r(prec);
        mpfr_set_d(r.x_, v, MPFR_RNDN);
        return r;
    }
    static Real of_string(const std::string& s, long prec) {
        Real r(prec);
        mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }
    static Real pi(long prec) {
        Real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    long prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    bool is_zero() const { return mpfr_zero_p(x_); }
    bool is_nan() const { return mpfr_nan_p(x_); }
    int sgn() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long exponent() const { return is_zero() ? LONG_MIN : mpfr_get_exp(x_); }

    /// log2(|x|), -inf as a very negative number when x == 0.
    double log2_abs() const {
        if (is_zero()) return -1e18;
        Real t = abs(*this);
        mpfr_log2(t.x_, t.x_, MPFR_RNDN);
        return t.to_double();
    }

    std::string str(int digits10 = 0) const;

#define PLWB_REAL_BINOP(op, fn)                                      \
    friend Real operator op(const Real& a, const Real& b) {          \
        Real r(std::max(a.prec(), b.prec()));                        \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                             \
        return r;                                                    \
    }
    PLWB_REAL_BINOP(+, mpfr_add)
    PLWB_REAL_BINOP(-, mpfr_sub)
    PLWB_REAL_BINOP(*, mpfr_mul)
    PLWB_REAL_BINOP(/, mpfr_div)
#undef PLWB_REAL_BINOP

    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

#define PLWB_REAL_FN(name, fn)                \
    friend Real name(const Real& a) {         \
        Real r(a.prec());                     \
        fn(r.x_, a.x_, MPFR_RNDN);            \
        return r;                             \
    }
    PLWB_REAL_FN(abs, mpfr_abs)
    PLWB_REAL_FN(log, mpfr_log)
    PLWB_REAL_FN(exp, mpfr_exp)
    PLWB_REAL_FN(sqrt, mpfr_sqrt)
    PLWB_REAL_FN(cos, mpfr_cos)
    PLWB_REAL_FN(sin, mpfr_sin)
    PLWB_REAL_FN(floor_r, mpfr_rint_floor)
#undef PLWB_REAL_FN

    friend Real atan2(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.x_, y.x_, x.x_, MPFR_RNDN);
        return r;
    }
    friend Real pow_si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_pow_si(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }
    friend Real mul_2exp(const Real& a, long e) {
        Real r(a.prec());
        mpfr_mul_2si(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }
    Int floor_int() const {
        Real f(prec());
        mpfr_rint_floor(f.x_, x_, MPFR_RNDN);
        Int z;
        mpfr_get_z(z.get_mpz_t(), f.x_, MPFR_RNDN);
        return z;
    }

  private:
    mpfr_t x_;
};

/// Complex number over Real.
struct Cplx {
    Real re, im;

    Cplx() = default;
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Cplx of_real(Real r) {
        long p = r.prec();
        return {std::move(r), Real(p)};
    }
    static Cplx of_rat(const Rat& a, const Rat& b, long prec) {
        return {Real::of_rat(a, prec), Real::of_rat(b, prec)};
    }
    long prec() const { return std::max(re.prec(), im.prec()); }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Cplx& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }

    friend Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
    friend Real abs(const Cplx& a) {
        Real r(a.prec());
        mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
        return r;
    }
    friend Real arg(const Cplx& a) { return atan2(a.im, a.re); }
    /// Principal logarithm.
    friend Cplx log(const Cplx& a) { return {log(abs(a)), arg(a)}; }
    friend Cplx exp(const Cplx& a) {
        Real m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace plwb
