#pragma once

#include <map>

#include "plwb/coalg.hpp"
#include "plwb/polylog_num.hpp"

namespace plwb {

struct Unsupported : std::domain_error {
    explicit Unsupported(const std::string& w) : std::domain_error("no single-valued realization: " + w) {}
};

/// Numeric embedding of the formal points.
struct NumAssign {
    std::map<PointId, Cplx> vals;
    long prec = 128;
};

/// Complex value of an argument under the embedding.
Cplx arg_value(const Arg& a, const NumAssign& s);

/// Single-valued realization of a generator: LiN/BrN via P_n, Br21 via its
/// [.]_3 elimination, weight-3 correlators via the affine reduction to the
/// depth-2 pattern, LogDiff via log|.|. Br31, LiMulti and generic iterated
/// integrals have no single-valued formula in scope.
Real sv_realize(const Gen& g, const NumAssign& s, Precision p);

/// Linear extension; the weight-1 stratum realizes as log|.|.
Real sv_realize(const CoalgElem& e, const NumAssign& s, Precision p);

/// A 1-parameter rational family of point assignments (each point a
/// polynomial in t).
struct RationalCurve {
    std::map<PointId, std::vector<Rat>> coeffs;  // constant term first
    NumAssign at(const Cplx& t, long prec) const;
};

/// Multiparametric falsification functional for Λᵏ vanishing: each degree-k
/// term contributes c · det(R(key_b)(t_a)). Zero (within budget) whenever the
/// element vanishes identically along the family.
Real multiparam_test(const WedgeElem& e, const RationalCurve& curve, const std::vector<Cplx>& ts,
                     Precision p);

/// Biparametric falsification functional for wedge vanishing:
///   Σ_i c_i [R(g_i)(t1) R(h_i)(t2) − R(h_i)(t1) R(g_i)(t2)].
Real biparam_test(const WedgeElem& e, const RationalCurve& curve, const Cplx& t1, const Cplx& t2,
                  Precision p);

}  // namespace plwb
