#include "plwb/realize.hpp"

namespace plwb {

Cplx arg_value(const Arg& a, const NumAssign& s) {
    long prec = s.prec;
    if (a.is_inf()) throw Unsupported("infinite argument");
    if (a.is_rat()) return Cplx::of_rat(a.q, Rat(0), prec);
    Cplx acc{Real::of_long(a.mono.sgn, prec), Real(prec)};
    for (auto& [k, e] : a.mono.unit.terms()) {
        if (!is_integer(e)) throw Unsupported("fractional exponent");
        long ee = e.get_num().get_si();
        Cplx base{Real(prec), Real(prec)};
        if (k.kind == UnitKey::Kind::Prime) {
            base = Cplx(Real::of_int(k.prime, prec), Real(prec));
        } else {
            auto it = s.vals.find(k.i);
            auto jt = s.vals.find(k.j);
            if (it == s.vals.end() || jt == s.vals.end()) throw errors::UnassignedPoint();
            base = it->second - jt->second;
        }
        Cplx one{Real::of_long(1, prec), Real(prec)};
        Cplx b = ee < 0 ? one / base : base;
        for (long t = 0; t < (ee < 0 ? -ee : ee); ++t) acc = acc * b;
    }
    return acc;
}

namespace {

Real realize_pn(int n, const Cplx& z, Precision p) {
    if (z.is_zero()) return Real(p.bits + 64);
    return p_n(n, z, p);
}

// R(Br21(x,y)): the [.]_3 elimination evaluated through P_3, including the
// constant -P_3(1) = -zeta(3).
Real realize_br21(const Cplx& x, const Cplx& y, Precision p) {
    long prec = p.bits + 64;
    Cplx one{Real::of_long(1, prec), Real(prec)};
    // P_3 of num/den with the projective conventions P(0) = P(∞) = 0, so that
    // degenerate arguments take the limit values.
    auto pn_frac = [&](const Cplx& num, const Cplx& den) {
        if (num.is_zero() || den.is_zero()) return Real(prec);
        return p_n(3, num / den, p);
    };
    Real acc = pn_frac(x - one, x);                 // 1 - x^{-1}
    acc += pn_frac(y - one, y);                     // 1 - y^{-1}
    acc += pn_frac(y, x);                           // y/x
    acc += pn_frac(one - y, one - x);               // (1-y)/(1-x)
    acc -= pn_frac(x * (one - y), y * (one - x));   // x(1-y)/(y(1-x))
    acc -= zeta_value(3, p);
    return acc;
}

}  // namespace

Real sv_realize(const Gen& g, const NumAssign& s, Precision p) {
    long prec = p.bits + 64;
    switch (g.kind) {
        case Gen::Kind::LogDiff: {
            Cplx d = arg_value(g.args[0], s) - arg_value(g.args[1], s);
            return log(abs(d));
        }
        case Gen::Kind::LiN:
        case Gen::Kind::BrN:
            return realize_pn(int(g.ns[0]), arg_value(g.args[0], s), p);
        case Gen::Kind::Br21:
            return realize_br21(arg_value(g.args[0], s), arg_value(g.args[1], s), p);
        case Gen::Kind::Cor: {
            if (g.weight == 3 && g.args.size() == 4) {
                // Affine reduction Cor(w0,w1,w2,w3) = Cor(0,x,1,y) = [x,y]_{2,1}
                // (weight >= 2 correlators are affine-invariant).
                std::vector<Cplx> w;
                for (auto& a : g.args) w.push_back(arg_value(a, s));
                for (std::size_t rot = 0; rot < 4; ++rot) {
                    Cplx span = w[(rot + 2) % 4] - w[rot];
                    if (span.is_zero() || abs(span).log2_abs() < double(-(p.bits / 2))) continue;
                    Cplx x = (w[(rot + 1) % 4] - w[rot]) / span;
                    Cplx y = (w[(rot + 3) % 4] - w[rot]) / span;
                    return realize_br21(x, y, p);
                }
                throw Unsupported("degenerate weight-3 correlator");
            }
            throw Unsupported("generic correlator");
        }
        case Gen::Kind::Br31:
            throw Unsupported("Br31");
        case Gen::Kind::LiMulti:
            throw Unsupported("LiMulti");
        case Gen::Kind::Iter:
            throw Unsupported("generic iterated integral");
    }
    return Real(prec);
}

Real sv_realize(const CoalgElem& e, const NumAssign& s, Precision p) {
    long prec = p.bits + 64;
    Real acc(prec);
    for (auto& [g, c] : e.gens.terms()) acc += Real::of_rat(c, prec) * sv_realize(g, s, p);
    for (auto& [u, c] : e.logs.terms()) {
        Real lv(prec);
        if (u.kind == UnitKey::Kind::Prime) {
            lv = log(Real::of_int(u.prime, prec));
        } else {
            auto it = s.vals.find(u.i);
            auto jt = s.vals.find(u.j);
            if (it == s.vals.end() || jt == s.vals.end()) throw errors::UnassignedPoint();
            lv = log(abs(it->second - jt->second));
        }
        acc += Real::of_rat(c, prec) * lv;
    }
    return acc;
}

NumAssign RationalCurve::at(const Cplx& t, long prec) const {
    NumAssign s;
    s.prec = prec;
    for (auto& [p, poly] : coeffs) {
        Cplx acc{Real(prec), Real(prec)};
        for (std::size_t i = poly.size(); i-- > 0;)
            acc = acc * t + Cplx::of_rat(poly[i], Rat(0), prec);
        s.vals[p] = acc;
    }
    return s;
}

namespace {

Real realize_key(const WKey& k, const NumAssign& s, Precision p) {
    if (!k.is_unit) return sv_realize(k.gen, s, p);
    CoalgElem e1;
    e1.logs.add(k.unit, Rat(1));
    return sv_realize(e1, s, p);
}

Real det_small(std::vector<std::vector<Real>>& m, long prec) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3)
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    // Gaussian elimination fallback for k >= 4.
    Real det = Real::of_long(1, prec);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
        if (m[piv][col].is_zero()) return Real(prec);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Real f = m[r][col] / m[col][col];
            for (std::size_t c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return det;
}

}  // namespace

Real multiparam_test(const WedgeElem& e, const RationalCurve& curve, const std::vector<Cplx>& ts,
                     Precision p) {
    long prec = p.bits + 64;
    std::vector<NumAssign> ss;
    for (auto& t : ts) ss.push_back(curve.at(t, prec));

    Real acc(prec);
    for (auto& [tuple, c] : e.terms()) {
        if (tuple.size() != ts.size())
            throw std::domain_error("multiparam_test: degree/parameter mismatch");
        std::size_t k = tuple.size();
        std::vector<std::vector<Real>> m(k, std::vector<Real>(k, Real(prec)));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) m[a][b] = realize_key(tuple[b], ss[a], p);
        acc += Real::of_rat(c, prec) * det_small(m, prec);
    }
    return acc;
}

Real biparam_test(const WedgeElem& e, const RationalCurve& curve, const Cplx& t1, const Cplx& t2,
                  Precision p) {
    return multiparam_test(e, curve, {t1, t2}, p);
}

}  // namespace plwb
