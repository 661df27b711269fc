#include "plwb/points.hpp"

#include <algorithm>
#include <set>

namespace plwb {

SignedUnit atom_diff(PointId a, PointId b) {
    if (a == b) throw errors::DuplicatePoints();
    SignedUnit s;
    s.sgn = a < b ? 1 : -1;
    s.unit.add(UnitKey::make_atom(a, b), Rat(1));
    return s;
}

SignedUnit cross_ratio_r2(PointId a, PointId b, PointId c, PointId d) {
    std::set<PointId> distinct{a, b, c, d};
    if (distinct.size() != 4) throw errors::DuplicatePoints();
    return atom_diff(a, b) * atom_diff(c, d) * atom_diff(b, c).inverse() *
           atom_diff(d, a).inverse();
}

SignedUnit cross_ratio_r3(PointId a, PointId b, PointId c, PointId d, PointId e, PointId f) {
    std::set<PointId> distinct{a, b, c, d, e, f};
    if (distinct.size() != 6) throw errors::DuplicatePoints();
    SignedUnit r = atom_diff(a, b) * atom_diff(c, d) * atom_diff(e, f) *
                   atom_diff(b, c).inverse() * atom_diff(d, e).inverse() *
                   atom_diff(f, a).inverse();
    return r.negated();
}

namespace {

// Multiplies num/den by the extended difference (x − y); ∞-factors are dropped.
struct ExtProduct {
    Rat num = 1, den = 1;
    int zero_num = 0, zero_den = 0;

    void mul_num(const Ext& x, const Ext& y) {
        if (x.is_inf() || y.is_inf()) return;
        Rat d = x.v - y.v;
        if (d == 0)
            ++zero_num;
        else
            num *= d;
    }
    void mul_den(const Ext& x, const Ext& y) {
        if (x.is_inf() || y.is_inf()) return;
        Rat d = x.v - y.v;
        if (d == 0)
            ++zero_den;
        else
            den *= d;
    }
    Ext result() const {
        if (zero_num && zero_den) throw errors::DegenerateAtom();
        if (zero_num) return Ext(Rat(0));
        if (zero_den) return Ext::infinity();
        return Ext(num / den);
    }
};

}  // namespace

Ext cross_ratio_r2_value(const Ext& a, const Ext& b, const Ext& c, const Ext& d) {
    ExtProduct p;
    p.mul_num(a, b);
    p.mul_num(c, d);
    p.mul_den(b, c);
    p.mul_den(d, a);
    return p.result();
}

Ext cross_ratio_r3_value(const Ext& a, const Ext& b, const Ext& c, const Ext& d, const Ext& e,
                         const Ext& f) {
    ExtProduct p;
    p.mul_num(a, b);
    p.mul_num(c, d);
    p.mul_num(e, f);
    p.mul_den(b, c);
    p.mul_den(d, e);
    p.mul_den(f, a);
    Ext r = p.result();
    if (!r.is_inf()) r.v = -r.v;
    return r;
}

Ext birapport_value(const Ext& a, const Ext& b, const Ext& c, const Ext& d) {
    ExtProduct p;
    p.mul_num(a, c);
    p.mul_num(b, d);
    p.mul_den(a, d);
    p.mul_den(b, c);
    return p.result();
}

FactoredUnit evaluate_unit(const FactoredUnit& m, const PointAssignment& sigma) {
    FactoredUnit out;
    for (auto& [k, e] : m.terms()) {
        if (k.kind == UnitKey::Kind::Prime) {
            out.add(k, e);
            continue;
        }
        auto it = sigma.find(k.i);
        auto jt = sigma.find(k.j);
        if (it == sigma.end() || jt == sigma.end()) throw errors::UnassignedPoint();
        if (it->second.is_inf() || jt->second.is_inf()) continue;  // projective limit
        Rat d = it->second.v - jt->second.v;
        if (d == 0) throw errors::DegenerateAtom();
        FactoredUnit f = factor_rational(d);
        out += f * e;
    }
    return out;
}

Rat evaluate_value(const FactoredUnit& m, const PointAssignment& sigma, int extra_sign) {
    Rat v(extra_sign);
    for (auto& [k, e] : m.terms()) {
        if (!is_integer(e)) throw std::domain_error("evaluate_value: fractional exponent");
        long ee = e.get_num().get_si();
        Rat base;
        if (k.kind == UnitKey::Kind::Prime) {
            base = Rat(k.prime);
        } else {
            auto it = sigma.find(k.i);
            auto jt = sigma.find(k.j);
            if (it == sigma.end() || jt == sigma.end()) throw errors::UnassignedPoint();
            if (it->second.is_inf() || jt->second.is_inf()) continue;
            base = it->second.v - jt->second.v;
            if (base == 0) throw errors::DegenerateAtom();
        }
        Rat b = ee < 0 ? Rat(1) / base : base;
        for (long t = 0; t < (ee < 0 ? -ee : ee); ++t) v *= b;
    }
    return v;
}

namespace {

Poly point_poly(PointId p, const PointCtx& ctx) {
    auto it = ctx.bound.find(p);
    if (it != ctx.bound.end()) return Poly::constant(it->second);
    return Poly::var(p);
}

// Literal expansion of a signed monomial as num/den polynomials; den is the
// literal product of the negative-exponent factors (so den_unit has sign +1).
struct Expansion {
    Poly num = Poly::constant(1);
    Poly den = Poly::constant(1);
    FactoredUnit den_unit;
};

Expansion expand(const SignedUnit& m, const PointCtx& ctx) {
    Expansion ex;
    ex.num = Poly::constant(Rat(m.sgn));
    for (auto& [k, e] : m.unit.terms()) {
        if (!is_integer(e)) throw errors::NotClosed("fractional exponent");
        long ee = e.get_num().get_si();
        Poly f = k.kind == UnitKey::Kind::Prime
                     ? Poly::constant(Rat(k.prime))
                     : point_poly(k.i, ctx) - point_poly(k.j, ctx);
        for (long t = 0; t < (ee < 0 ? -ee : ee); ++t) {
            if (ee > 0)
                ex.num = ex.num * f;
            else
                ex.den = ex.den * f;
        }
        if (ee < 0) ex.den_unit.add(k, -e);
    }
    return ex;
}

std::set<PointId> support_of(const SignedUnit& m, const PointCtx& ctx) {
    std::set<PointId> s;
    for (auto& [k, e] : m.unit.terms())
        if (k.kind == UnitKey::Kind::Atom) {
            s.insert(k.i);
            s.insert(k.j);
        }
    for (auto& [p, v] : ctx.bound) s.insert(p);
    for (PointId p : ctx.points) s.insert(p);
    return s;
}

// Factor p into literal difference atoms d(i,j) (i<j, as stored) times a
// rational constant. The constant's sign is the literal sign of the result.
SignedUnit factor_into_atoms(Poly p, const PointCtx& ctx, const std::set<PointId>& support) {
    if (p.is_zero()) throw errors::ZeroInput();
    std::vector<PointId> pts(support.begin(), support.end());
    SignedUnit out;
    for (size_t a = 0; a < pts.size(); ++a) {
        for (size_t b = a + 1; b < pts.size(); ++b) {
            Poly atom = point_poly(pts[a], ctx) - point_poly(pts[b], ctx);
            if (atom.is_constant()) continue;
            while (true) {
                auto q = Poly::div_exact(p, atom);
                if (!q) break;
                p = *q;
                out.unit.add(UnitKey::make_atom(pts[a], pts[b]), Rat(1));
            }
        }
    }
    if (!p.is_constant()) throw errors::NotClosed(p.str());
    SignedUnit cf = factor_rational_signed(p.constant_value());
    out.unit += cf.unit;
    out.sgn = cf.sgn;
    return out;
}

}  // namespace

SignedUnit one_minus(const SignedUnit& m, const PointCtx& ctx) {
    Expansion ex = expand(m, ctx);
    Poly p = ex.den - ex.num;
    if (p.is_zero()) throw errors::ZeroInput();  // m == 1
    SignedUnit fac = factor_into_atoms(p, ctx, support_of(m, ctx));
    return SignedUnit(fac.unit - ex.den_unit, fac.sgn);
}

SignedUnit monomial_diff(const SignedUnit& a, const SignedUnit& b, const PointCtx& ctx) {
    Expansion ea = expand(a, ctx);
    Expansion eb = expand(b, ctx);
    Poly p = ea.num * eb.den - eb.num * ea.den;  // a − b over the common denominator
    if (p.is_zero()) throw errors::ZeroInput();
    std::set<PointId> support = support_of(a, ctx);
    for (PointId q : support_of(b, ctx)) support.insert(q);
    SignedUnit fac = factor_into_atoms(p, ctx, support);
    return SignedUnit(fac.unit - ea.den_unit - eb.den_unit, fac.sgn);
}

FactoredUnit one_minus(const FactoredUnit& m, const PointCtx& ctx) {
    return one_minus(SignedUnit(m, 1), ctx).unit;
}

}  // namespace plwb
