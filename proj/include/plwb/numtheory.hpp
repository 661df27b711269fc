#pragma once

#include <vector>

#include "plwb/real.hpp"

namespace plwb {

struct NonFundamentalDiscriminant : std::domain_error {
    NonFundamentalDiscriminant() : std::domain_error("discriminant is not fundamental") {}
};

/// Exact Bernoulli number B_k (B_1 = -1/2). Memoized behind a lock.
Rat bernoulli(unsigned k);

/// Exact coefficients of the Bernoulli polynomial B_n(x), highest degree first.
std::vector<Rat> bernoulli_poly(unsigned n);

/// Kronecker symbol (a|n), full generality.
int kronecker_symbol(const Int& a, const Int& n);
inline int kronecker_symbol(long a, long n) { return kronecker_symbol(Int(a), Int(n)); }

bool is_fundamental_discriminant(long d);

/// Hurwitz zeta ζ(n, a) for integer n >= 2 and rational a in (0,1],
/// Euler-Maclaurin with exact Bernoulli coefficients.
Real hurwitz_zeta(long n, const Rat& a, Precision p);

/// Riemann zeta at integer n >= 2.
Real zeta_value(long n, Precision p);

/// Digamma at rational x > 0 (used for the L(1,χ) assembly).
Real digamma(const Rat& x, Precision p);

/// L(n, χ_D) for a fundamental discriminant D; n >= 2 directly, n = 1 for
/// nontrivial χ via the digamma assembly.
Real dirichlet_L(long n, long D, Precision p);

}  // namespace plwb
