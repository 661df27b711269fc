#pragma once

#include "plwb/periods.hpp"
#include "plwb/unit.hpp"

namespace plwb {

struct TrivialTarget : std::domain_error {
    TrivialTarget() : std::domain_error("d_n = 0: no embeddings to evaluate") {}
};
struct SingularDeterminant : std::domain_error {
    SingularDeterminant() : std::domain_error("P_n determinant vanishes within budget") {}
};
struct UnfactorableElement : std::domain_error {
    UnfactorableElement() : std::domain_error("element does not factor over the declared atoms") {}
};

/// Element a + b√D of a quadratic field, exact.
struct QuadElem {
    Rat a, b;

    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.a == y.a && x.b == y.b;
    }
    bool is_zero() const { return a == 0 && b == 0; }
    QuadElem conj() const { return {a, -b}; }
    Rat norm() const;  // needs D; see QuadField::norm
};

struct QuadField {
    long D;          // fundamental discriminant
    int r1, r2;      // (2,0) if D > 0, (0,1) if D < 0

    explicit QuadField(long disc);

    int d_n(int n) const { return n % 2 == 1 ? r1 + r2 : r2; }

    Rat norm(const QuadElem& x) const { return x.a * x.a - Rat(D) * x.b * x.b; }
    QuadElem mul(const QuadElem& x, const QuadElem& y) const {
        return {x.a * y.a + Rat(D) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    QuadElem inv(const QuadElem& x) const {
        Rat n = norm(x);
        if (n == 0) throw errors::ZeroInput();
        return {x.a / n, -x.b / n};
    }
    QuadElem pow(QuadElem x, long e) const;

    /// Numeric embeddings at working precision. D < 0: the two conjugates;
    /// D > 0: the two real embeddings.
    std::vector<Cplx> embeddings(const QuadElem& x, long prec) const;

    /// Order of the torsion subgroup of the unit group.
    int torsion_order() const { return D == -4 ? 4 : D == -3 ? 6 : 2; }
};

/// Fundamental unit (t + u√D)/2, via the continued fraction of √D plus the
/// ±4 half-integer refinement for D ≡ 1 (mod 4). Requires D > 0.
QuadElem fundamental_unit(long D);

/// ζ_F(n) = ζ(n) · L(n, χ_D) for the quadratic field of discriminant D.
Real dedekind_zeta_quadratic(int n, const QuadField& f, Precision p);

/// P_n at the required embeddings of a formal Q-combination of field elements.
struct XiElem {
    Rat coeff;
    QuadElem x;
};
std::vector<Real> pn_field(const std::vector<XiElem>& xi, int n, const QuadField& f, Precision p);

struct RatioResult {
    Rat value;
    Real residual{64};
    bool detected = false;
};

/// ζ_F(n)·√|D| / (π^{n(2−d_n)} · det P_n^F(ξ)), rationalized.
RatioResult zagier_ratio(const QuadField& f, int n,
                         const std::vector<std::vector<XiElem>>& xi, Precision p,
                         const Int& maxden = Int(10000));

/// Klingen–Siegel: ζ_F(n)·√D / π^{2n} for D > 0 and even n.
RatioResult klingen_siegel_check(long D, int n, Precision p, const Int& maxden = Int(10000));

/// Class-number ratio: D > 0: L(1,χ_D)·√D / log ε_D; D < 0: L(1,χ_D)·√|D|/π.
RatioResult class_number_check(long D, Precision p, const Int& maxden = Int(10000));

/// Exact δ̃₂-certification of ξ over declared multiplicative atoms with
/// supplied exponent vectors (verified exactly in the field; torsion detected
/// by a power check). Independence of the atoms is an input assumption.
struct Delta2Certificate {
    bool pass = false;
    std::string witness;  // nonzero wedge coordinates if failing
};
struct DeclaredAtom {
    std::string name;
    QuadElem value;
};
struct FactoredXi {
    Rat coeff;
    QuadElem x;
    std::vector<Rat> x_exponents;          // over the declared atoms
    std::vector<Rat> one_minus_exponents;  // of 1 − x
};
Delta2Certificate delta2_certify(const std::vector<DeclaredAtom>& atoms,
                                 const std::vector<FactoredXi>& xi, const QuadField& f);

/// Rationality acceptance: residual < q^{-2}·2^{-20} (continued-fraction bound).
bool rational_detected(const Rat& q, const Real& residual);

}  // namespace plwb
