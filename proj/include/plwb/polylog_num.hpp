#pragma once

#include <vector>

#include "plwb/numtheory.hpp"
#include "plwb/real.hpp"

namespace plwb {

struct OnBranchCut : std::domain_error {
    OnBranchCut() : std::domain_error("argument on the branch cut [1,inf)") {}
};
struct OutsideConvergenceDomain : std::domain_error {
    OutsideConvergenceDomain() : std::domain_error("outside the safe convergence polydisc") {}
};

/// Branch policy for arguments on the cut [1,∞): Strict throws OnBranchCut,
/// Above evaluates the limit from the upper half plane (the "chosen branch"
/// used by the period matrix at real arguments).
enum class Branch { Strict, Above };

/// Classical polylogarithm Li_n(z), principal branch, z off [1,∞) (z = 1
/// allowed for n >= 2). Dispatches between the direct series, the expansion
/// at z = 1, and the Bernoulli-polynomial inversion formula.
Cplx li_n(int n, const Cplx& z, Precision p, Branch branch = Branch::Strict);

/// Reference evaluation by Taylor continuation of the ODE stack
/// dLi_k = Li_{k-1} dlog z along the radial path (or the given waypoints,
/// starting from a series-disc seed). Returns the full stack Li_1..Li_n.
std::vector<Cplx> li_stack_ode(int n, const Cplx& z, Precision p,
                               const std::vector<Cplx>& waypoints = {});

Cplx li_n_ode(int n, const Cplx& z, Precision p, const std::vector<Cplx>& waypoints = {});

/// Multiple polylogarithm Li_{n1..nr}(z1..zr) inside the polydisc where
/// prod_{j>=i} |z_j| <= 0.9 for every i.
Cplx li_multi(const std::vector<long>& ns, const std::vector<Cplx>& zs, Precision p);

/// Zagier's single-valued P_n: p_n(sum_k 2^k B_k/k! log^k|z| Li_{n-k}(z)),
/// p_n = Re for odd n, Im for even n. P_n(0) = P_n(∞) = 0 handled by callers;
/// here z must be finite nonzero. n >= 1 (P_1(z) = -log|1-z|).
Real p_n(int n, const Cplx& z, Precision p);

}  // namespace plwb
