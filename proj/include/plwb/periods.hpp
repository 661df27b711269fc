#pragma once

#include <vector>

#include "plwb/polylog_num.hpp"

namespace plwb {

struct NonUnipotent : std::domain_error {
    NonUnipotent() : std::domain_error("matrix is not unipotent after scaling") {}
};

/// (n+1)x(n+1) upper-triangular period matrix; row k carries weight k and the
/// diagonal entry (2iπ)^k.
struct PeriodMatrix {
    int n = 0;
    std::vector<std::vector<Cplx>> m;  // row-major, (n+1)^2

    const Cplx& at(int r, int c) const { return m[r][c]; }
};

/// Period matrix of the weight-<=n polylogarithmic motive at z: row 0 is
/// (1, Li_1(z), ..., Li_n(z)); row j has (2iπ)^j log^{k-j}(z)/(k-j)! at column
/// k >= j. At z = 1 the Li_1 entry is replaced by 0.
PeriodMatrix period_matrix(int n, const Cplx& z, Precision p);

/// Period matrix of the Kummer motive: ((1, log z), (0, 2iπ)).
PeriodMatrix kummer_matrix(const Cplx& z, Precision p);

/// The Hodge pairing: p_n-projection of entry (0,n) of (1/2) log(D conj(P)^{-1} P),
/// D = diag((-1)^k). The log is the finite unipotent series.
Real hodge_pairing(const PeriodMatrix& pm, int n, Precision p);

/// Best continued-fraction convergent with denominator <= maxden, plus the
/// residual |x - p/q|.
std::pair<Rat, Real> rationalize(const Real& x, const Int& maxden, Precision p);

}  // namespace plwb
