#include "plwb/quadfield.hpp"

#include <sstream>

namespace plwb {

QuadField::QuadField(long disc) : D(disc) {
    if (!is_fundamental_discriminant(disc)) throw NonFundamentalDiscriminant();
    r1 = D > 0 ? 2 : 0;
    r2 = D > 0 ? 0 : 1;
}

QuadElem QuadField::pow(QuadElem x, long e) const {
    bool invert = e < 0;
    if (invert) e = -e;
    QuadElem acc{Rat(1), Rat(0)};
    while (e > 0) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return invert ? inv(acc) : acc;
}

std::vector<Cplx> QuadField::embeddings(const QuadElem& x, long prec) const {
    Real sq = sqrt(Real::of_long(D > 0 ? D : -D, prec));
    Real a = Real::of_rat(x.a, prec), b = Real::of_rat(x.b, prec);
    if (D > 0) {
        return {Cplx::of_real(a + b * sq), Cplx::of_real(a - b * sq)};
    }
    return {Cplx{a, b * sq}, Cplx{a, -(b * sq)}};
}

QuadElem fundamental_unit(long D) {
    if (D <= 0) throw std::domain_error("fundamental_unit: needs D > 0");
    // Continued fraction of √D: a_0 = ⌊√D⌋, then the standard integer
    // recurrence m/d/a; convergents give the Pell solution p² − D q² = ±1.
    Int sq = sqrt(Int(D));
    long a0 = sq.get_si();
    long m = 0, den = 1, a = a0;
    Int p0 = 1, q0 = 0, p1 = a0, q1 = 1;
    for (int it = 0; it < 10000; ++it) {
        Int pell = p1 * p1 - Int(D) * q1 * q1;
        if (pell == 1 || pell == -1) break;
        m = den * a - m;
        den = (D - m * m) / den;
        a = (a0 + m) / den;
        Int p2 = Int(a) * p1 + p0;
        Int q2 = Int(a) * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    QuadElem unit{Rat(p1), Rat(q1)};  // p + q√D, the fundamental unit of Z[√D]
    if (D % 4 == 1) {
        // Check for a smaller half-integer unit (t + u√D)/2 with t² − Du² = ±4.
        for (long u = 1; u * u <= D / 2 + 4; ++u) {
            for (long s : {-4L, 4L}) {
                Int t2 = Int(D) * u * u + s;
                if (t2 <= 0) continue;
                Int t = sqrt(t2);
                if (t * t == t2) {
                    return {Rat(t, 2), Rat(u, 2)};
                }
            }
        }
    }
    return unit;
}

Real dedekind_zeta_quadratic(int n, const QuadField& f, Precision p) {
    if (n < 2) throw std::domain_error("dedekind_zeta_quadratic: n >= 2");
    return zeta_value(n, p) * dirichlet_L(n, f.D, p);
}

std::vector<Real> pn_field(const std::vector<XiElem>& xi, int n, const QuadField& f,
                           Precision p) {
    if (f.d_n(n) < 1) throw TrivialTarget();
    long prec = p.bits + 64;
    std::vector<Real> out;
    // Odd n: all r1 + r2 embeddings; even n: complex embeddings only.
    std::size_t count = std::size_t(f.d_n(n));
    for (std::size_t e = 0; e < count; ++e) {
        Real acc(prec);
        for (auto& term : xi) {
            if (term.x.is_zero()) throw errors::ZeroInput();
            auto emb = f.embeddings(term.x, prec);
            // For D < 0 use the first of the conjugate pair; for D > 0 take
            // the e-th real embedding.
            const Cplx& z = emb[e];
            acc += Real::of_rat(term.coeff, prec) * p_n(n, z, p);
        }
        out.push_back(acc);
    }
    return out;
}

bool rational_detected(const Rat& q, const Real& residual) {
    Real bound = Real::of_rat(Rat(1) / (q.get_den() * q.get_den()), residual.prec());
    bound = mul_2exp(bound, -20);
    return residual < bound;
}

namespace {

Real det_real(std::vector<std::vector<Real>> m, long prec) {
    std::size_t n = m.size();
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
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace

RatioResult zagier_ratio(const QuadField& f, int n, const std::vector<std::vector<XiElem>>& xi,
                         Precision p, const Int& maxden) {
    int dn = f.d_n(n);
    if (dn < 1) throw TrivialTarget();
    if (long(xi.size()) != dn) throw std::domain_error("zagier_ratio: needs d_n elements");
    long prec = p.bits + 64;

    std::vector<std::vector<Real>> m;
    for (auto& row : xi) m.push_back(pn_field(row, n, f, p));
    Real det = det_real(std::move(m), prec);
    if (det.is_zero() || det.log2_abs() < double(-(p.bits / 2))) throw SingularDeterminant();

    Real zf = dedekind_zeta_quadratic(n, f, p);
    Real sqd = sqrt(Real::of_long(f.D > 0 ? f.D : -f.D, prec));
    Real pi = Real::pi(prec);
    Real ratio = zf * sqd / (pow_si(pi, long(n) * (2 - dn)) * det);

    RatioResult out;
    auto [q, res] = rationalize(ratio, maxden, p);
    out.value = q;
    out.residual = res;
    out.detected = rational_detected(q, res);
    return out;
}

RatioResult klingen_siegel_check(long D, int n, Precision p, const Int& maxden) {
    if (D <= 1) throw std::domain_error("klingen_siegel_check: needs a real quadratic field");
    QuadField f(D);
    if (n % 2 != 0) throw std::domain_error("klingen_siegel_check: n must be even");
    long prec = p.bits + 64;
    Real zf = dedekind_zeta_quadratic(n, f, p);
    Real ratio = zf * sqrt(Real::of_long(D, prec)) / pow_si(Real::pi(prec), 2 * n);
    RatioResult out;
    auto [q, res] = rationalize(ratio, maxden, p);
    out.value = q;
    out.residual = res;
    out.detected = rational_detected(q, res);
    return out;
}

RatioResult class_number_check(long D, Precision p, const Int& maxden) {
    QuadField f(D);
    long prec = p.bits + 64;
    Real l1 = dirichlet_L(1, D, p);
    Real ratio(prec);
    if (D > 0) {
        QuadElem eps = fundamental_unit(D);
        Real val = abs(f.embeddings(eps, prec)[0].re);
        ratio = l1 * sqrt(Real::of_long(D, prec)) / log(val);
    } else {
        ratio = l1 * sqrt(Real::of_long(-D, prec)) / Real::pi(prec);
    }
    RatioResult out;
    auto [q, res] = rationalize(ratio, maxden, p);
    out.value = q;
    out.residual = res;
    out.detected = rational_detected(q, res);
    return out;
}

Delta2Certificate delta2_certify(const std::vector<DeclaredAtom>& atoms,
                                 const std::vector<FactoredXi>& xi, const QuadField& f) {
    Delta2Certificate cert;
    // Verify each supplied factorization exactly in the field (up to torsion:
    // roots of unity die in ⊗Q, detected by a power check).
    auto is_torsion = [&](const QuadElem& u) {
        QuadElem acc{Rat(1), Rat(0)};
        for (int k = 1; k <= 2 * f.torsion_order(); ++k) {
            acc = f.mul(acc, u);
            if (acc == QuadElem{Rat(1), Rat(0)}) return true;
        }
        return false;
    };
    auto verify = [&](const QuadElem& target, const std::vector<Rat>& exps) {
        if (exps.size() != atoms.size()) throw UnfactorableElement();
        QuadElem acc{Rat(1), Rat(0)};
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (!is_integer(exps[i])) throw UnfactorableElement();
            acc = f.mul(acc, f.pow(atoms[i].value, exps[i].get_num().get_si()));
        }
        // target / acc must be torsion
        QuadElem q = f.mul(target, f.inv(acc));
        if (!is_torsion(q)) throw UnfactorableElement();
    };

    // δ̃₂ ξ = Σ c_i · (−(1−x_i) ∧ x_i) over the declared atom coordinates.
    std::map<std::pair<std::size_t, std::size_t>, Rat> wedge_coords;
    for (auto& term : xi) {
        QuadElem one_minus{Rat(1) - term.x.a, -term.x.b};
        verify(term.x, term.x_exponents);
        verify(one_minus, term.one_minus_exponents);
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = 0; j < atoms.size(); ++j) {
                if (i == j) continue;
                Rat contrib = -term.coeff * term.one_minus_exponents[i] * term.x_exponents[j];
                if (contrib == 0) continue;
                auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
                wedge_coords[key] += (i < j) ? contrib : -contrib;
            }
    }
    std::ostringstream witness;
    bool ok = true;
    for (auto& [key, c] : wedge_coords) {
        if (c == 0) continue;
        ok = false;
        witness << atoms[key.first].name << "^" << atoms[key.second].name << ": " << to_string(c)
                << "; ";
    }
    cert.pass = ok;
    cert.witness = witness.str();
    return cert;
}

}  // namespace plwb
