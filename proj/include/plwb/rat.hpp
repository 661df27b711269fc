#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plwb {

/// Exact rational, always in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline int sign(const Rat& q) { return sgn(q); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// floor(num/den) for a rational.
inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

struct errors {
    struct ZeroInput : std::domain_error {
        ZeroInput() : std::domain_error("zero input") {}
    };
    struct DuplicatePoints : std::domain_error {
        DuplicatePoints() : std::domain_error("duplicate points") {}
    };
    struct NotClosed : std::domain_error {
        explicit NotClosed(const std::string& what) : std::domain_error("not closed: " + what) {}
    };
    struct DegenerateAtom : std::domain_error {
        DegenerateAtom() : std::domain_error("degenerate atom (zero difference)") {}
    };
    struct UnassignedPoint : std::domain_error {
        UnassignedPoint() : std::domain_error("unassigned point") {}
    };
    struct NotInSpan : std::domain_error {
        NotInSpan() : std::domain_error("vector not in span") {}
    };
};

// ---- integer factorization (trial division + Miller-Rabin + Pollard rho) ----

bool is_probable_prime(const Int& n);

/// Prime factorization of n > 0 as (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

}  // namespace plwb
