#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "plwb/lincomb.hpp"
#include "plwb/rat.hpp"

namespace plwb {

using PointId = int;

/// Basis key of F^x ⊗ Q: a prime, or a formal difference atom d(i,j) = x_i − x_j
/// with i < j. Total order: primes (by value) first, then atoms lexicographically.
struct UnitKey {
    enum class Kind { Prime, Atom };
    Kind kind;
    Int prime;   // Kind::Prime
    PointId i = 0, j = 0;  // Kind::Atom, i < j

    static UnitKey make_prime(Int p) { return {Kind::Prime, std::move(p), 0, 0}; }
    static UnitKey make_atom(PointId a, PointId b) {
        if (a == b) throw errors::DuplicatePoints();
        if (a > b) std::swap(a, b);
        return {Kind::Atom, Int(0), a, b};
    }

    friend bool operator<(const UnitKey& x, const UnitKey& y) {
        if (x.kind != y.kind) return x.kind == Kind::Prime;
        if (x.kind == Kind::Prime) return x.prime < y.prime;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    }
    friend bool operator==(const UnitKey& x, const UnitKey& y) {
        return x.kind == y.kind && x.prime == y.prime && x.i == y.i && x.j == y.j;
    }
    std::string str() const {
        if (kind == Kind::Prime) return prime.get_str();
        return "d(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

/// Element of F^x ⊗ Q as an exponent map; torsion (signs, roots of unity) is
/// never represented.
using FactoredUnit = LinComb<UnitKey>;

/// A factored unit together with its literal sign (the sign the represented
/// value takes when every atom d(i,j) is read as x_i − x_j and points are in
/// increasing position). The sign dies at the coalgebra boundary but is needed
/// to form 1 − m and 1 + m correctly.
struct SignedUnit {
    FactoredUnit unit;
    int sgn = 1;

    SignedUnit() = default;
    SignedUnit(FactoredUnit u, int s) : unit(std::move(u)), sgn(s) {}

    SignedUnit inverse() const {
        SignedUnit r(unit * Rat(-1), sgn);
        return r;
    }
    SignedUnit negated() const { return SignedUnit(unit, -sgn); }
    friend SignedUnit operator*(const SignedUnit& a, const SignedUnit& b) {
        return SignedUnit(a.unit + b.unit, a.sgn * b.sgn);
    }
    friend bool operator==(const SignedUnit& a, const SignedUnit& b) {
        return a.sgn == b.sgn && a.unit == b.unit;
    }
    friend bool operator<(const SignedUnit& a, const SignedUnit& b) {
        if (a.sgn != b.sgn) return a.sgn < b.sgn;
        return a.unit < b.unit;
    }
};

/// Factor a nonzero rational into prime exponents; the sign is torsion and dropped.
FactoredUnit factor_rational(const Rat& q);

/// Signed variant, keeping sgn(q).
SignedUnit factor_rational_signed(const Rat& q);

/// Reassemble |value| of a prime-supported unit with integer exponents.
Rat unit_value_abs(const FactoredUnit& u);

/// True if every key is a prime.
bool is_prime_supported(const FactoredUnit& u);

/// True if every exponent is an integer.
bool has_integer_exponents(const FactoredUnit& u);

std::string unit_to_string(const FactoredUnit& u);

}  // namespace plwb
