#pragma once

#include <map>
#include <optional>
#include <vector>

#include "plwb/poly.hpp"
#include "plwb/unit.hpp"

namespace plwb {

/// A point of P^1(Q): a rational value or infinity.
struct Ext {
    bool inf = false;
    Rat v;

    Ext() = default;
    Ext(Rat q) : inf(false), v(std::move(q)) {}  // NOLINT(google-explicit-constructor)
    static Ext infinity() {
        Ext e;
        e.inf = true;
        return e;
    }
    bool is_inf() const { return inf; }
    friend bool operator==(const Ext& a, const Ext& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator<(const Ext& a, const Ext& b) {
        if (a.inf != b.inf) return !a.inf;  // finite < infinity
        if (a.inf) return false;
        return a.v < b.v;
    }
};

/// Assignment of rational (or infinite) values to formal points.
using PointAssignment = std::map<PointId, Ext>;

/// Formal context for atom manipulation: which points exist, and which are
/// bound to constants (specializations like the marked points 0 and 1).
struct PointCtx {
    std::vector<PointId> points;
    std::map<PointId, Rat> bound;

    bool is_bound(PointId p) const { return bound.count(p) != 0; }
    static PointCtx polygon(int n) {
        PointCtx c;
        for (int i = 1; i <= n; ++i) c.points.push_back(i);
        return c;
    }
};

/// Atom monomial for the literal difference x_i − x_j; a > b flips the sign.
SignedUnit atom_diff(PointId a, PointId b);

/// Normalized 4-point cross-ratio r2 = (x1−x2)(x3−x4)/((x2−x3)(x4−x1)) as a
/// signed atom monomial over formal points.
SignedUnit cross_ratio_r2(PointId a, PointId b, PointId c, PointId d);

/// 6-point variant r3 = −(x1−x2)(x3−x4)(x5−x6)/((x2−x3)(x4−x5)(x6−x1)).
SignedUnit cross_ratio_r3(PointId a, PointId b, PointId c, PointId d, PointId e, PointId f);

/// Cross-ratios of extended rational points; factors containing ∞ are dropped
/// (the projective limit).
Ext cross_ratio_r2_value(const Ext& a, const Ext& b, const Ext& c, const Ext& d);
Ext cross_ratio_r3_value(const Ext& a, const Ext& b, const Ext& c, const Ext& d, const Ext& e,
                         const Ext& f);
/// Classical birapport r(a,b,c,d) = (a−c)(b−d)/((a−d)(b−c)).
Ext birapport_value(const Ext& a, const Ext& b, const Ext& c, const Ext& d);

/// Specialize an atom monomial at σ. Factors containing ∞ are dropped; a zero
/// difference raises DegenerateAtom. Result is supported on primes only.
FactoredUnit evaluate_unit(const FactoredUnit& m, const PointAssignment& sigma);

/// Signed rational value of an atom monomial at σ (∞-factors dropped).
/// Requires integral exponents.
Rat evaluate_value(const FactoredUnit& m, const PointAssignment& sigma, int extra_sign = 1);

/// 1 − m as a signed atom monomial, by expanding the numerator polynomial of
/// 1 − m and trial-dividing by every candidate difference atom of the context.
/// Throws NotClosed when the numerator does not factor into atoms.
SignedUnit one_minus(const SignedUnit& m, const PointCtx& ctx);

/// 1 + m, i.e. one_minus of the negated monomial.
inline SignedUnit one_plus(const SignedUnit& m, const PointCtx& ctx) {
    return one_minus(m.negated(), ctx);
}

/// Difference a − b of two signed atom monomials as a signed atom monomial
/// (same trial-division algorithm). Throws NotClosed if it does not factor,
/// ZeroInput if a == b identically.
SignedUnit monomial_diff(const SignedUnit& a, const SignedUnit& b, const PointCtx& ctx);

/// Spec-surface wrapper: unsigned in, unsigned out (input read with literal
/// positive sign; result sign is torsion and dropped).
FactoredUnit one_minus(const FactoredUnit& m, const PointCtx& ctx);

}  // namespace plwb
