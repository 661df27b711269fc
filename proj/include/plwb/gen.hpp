#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plwb/points.hpp"
#include "plwb/wedge.hpp"

namespace plwb {

struct UnsupportedGenerator : std::domain_error {
    explicit UnsupportedGenerator(const std::string& w) : std::domain_error("unsupported: " + w) {}
};
struct UnfactorableArgument : std::domain_error {
    UnfactorableArgument() : std::domain_error("argument not factorable over the atom basis") {}
};

/// Argument of a polylogarithmic symbol: exact rational, ∞, or a signed atom
/// monomial (a ratio of point differences).
struct Arg {
    enum class Kind { Rational, Infinity, Monomial };
    Kind kind = Kind::Rational;
    Rat q;
    SignedUnit mono;

    Arg() = default;
    static Arg of_rat(Rat v) {
        Arg a;
        a.kind = Kind::Rational;
        a.q = std::move(v);
        return a;
    }
    static Arg infinity() {
        Arg a;
        a.kind = Kind::Infinity;
        return a;
    }
    static Arg of_mono(SignedUnit m) {
        // A monomial with pure prime support and integral exponents is a rational.
        if (is_prime_supported(m.unit) && has_integer_exponents(m.unit)) {
            Rat v = unit_value_abs(m.unit);
            return of_rat(m.sgn < 0 ? -v : v);
        }
        Arg a;
        a.kind = Kind::Monomial;
        a.mono = std::move(m);
        return a;
    }
    static Arg of_ext(const Ext& e) { return e.is_inf() ? infinity() : of_rat(e.v); }

    bool is_rat() const { return kind == Kind::Rational; }
    bool is_inf() const { return kind == Kind::Infinity; }
    bool is_mono() const { return kind == Kind::Monomial; }
    bool is_zero() const { return is_rat() && q == 0; }
    bool is_one() const { return is_rat() && q == 1; }
    bool is_minus_one() const { return is_rat() && q == -1; }

    Arg inverse() const {
        if (is_inf()) return of_rat(Rat(0));
        if (is_rat()) {
            if (q == 0) return infinity();
            return of_rat(Rat(1) / q);
        }
        return of_mono(mono.inverse());
    }
    Arg negated() const {
        if (is_inf()) return infinity();
        if (is_rat()) return of_rat(-q);
        return of_mono(mono.negated());
    }

    friend bool operator==(const Arg& a, const Arg& b) {
        if (a.kind != b.kind) return false;
        if (a.is_inf()) return true;
        if (a.is_rat()) return a.q == b.q;
        return a.mono == b.mono;
    }
    friend bool operator<(const Arg& a, const Arg& b) {
        if (a.kind != b.kind) return int(a.kind) < int(b.kind);
        if (a.is_inf()) return false;
        if (a.is_rat()) return a.q < b.q;
        return a.mono < b.mono;
    }
    std::string str() const;
};

/// a * b (both nonzero finite).
Arg arg_mul(const Arg& a, const Arg& b);
/// a / b.
Arg arg_ratio(const Arg& a, const Arg& b);
/// a − b as an Arg (∞ absorbs; monomial differences via trial division; throws
/// NotClosed when a monomial difference does not factor).
Arg arg_sub(const Arg& a, const Arg& b, const PointCtx& ctx);
/// 1 − a.
Arg arg_one_minus(const Arg& a, const PointCtx& ctx);
/// The F^x ⊗ Q class of a nonzero finite argument.
FactoredUnit arg_unit(const Arg& a);

/// Tagged generator of the polylogarithmic Lie coalgebra. LogDiff is the
/// weight-1 fallback log(a − b) for differences that do not factor over the
/// atom basis; it only ever feeds the numeric (biparametric) checks.
struct Gen {
    enum class Kind { LiN, LiMulti, Iter, Cor, BrN, Br21, Br31, LogDiff };
    Kind kind = Kind::LiN;
    int weight = 0;
    std::vector<long> ns;    // LiN/BrN: {n}; LiMulti/Iter: indices
    std::vector<Arg> args;   // LiN/BrN: {x}; Br21/Br31: {x,y}; Iter: a0,w...,aend; Cor: word; LogDiff: {a,b}

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.kind == b.kind && a.weight == b.weight && a.ns == b.ns && a.args == b.args;
    }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.kind != b.kind) return int(a.kind) < int(b.kind);
        if (a.ns != b.ns) return a.ns < b.ns;
        return a.args < b.args;
    }
    std::string str() const;
};

/// Wedge basis key: the weight-1 stratum is linearized into unit coordinates.
struct WKey {
    bool is_unit = true;
    UnitKey unit{UnitKey::Kind::Prime, Int(0), 0, 0};
    Gen gen;

    static WKey of_unit(UnitKey u) {
        WKey k;
        k.is_unit = true;
        k.unit = std::move(u);
        return k;
    }
    static WKey of_gen(Gen g) {
        WKey k;
        k.is_unit = false;
        k.gen = std::move(g);
        return k;
    }
    int weight() const { return is_unit ? 1 : gen.weight; }
    friend bool operator==(const WKey& a, const WKey& b) {
        if (a.is_unit != b.is_unit) return false;
        return a.is_unit ? a.unit == b.unit : a.gen == b.gen;
    }
    friend bool operator<(const WKey& a, const WKey& b) {
        if (a.is_unit != b.is_unit) return a.is_unit;
        return a.is_unit ? a.unit < b.unit : a.gen < b.gen;
    }
    std::string str() const { return is_unit ? unit.str() : gen.str(); }
};

/// Canonicalized element of Λ(C); Λ¹ weight-1 terms are unit keys, higher
/// weights are generators. This is the home of cobracket outputs (Λ²) and
/// Chevalley-Eilenberg chains (mixed degree).
using WedgeElem = Wedge<WKey>;

/// Q-linear combination of generators plus a linearized weight-1 part.
struct CoalgElem {
    LinComb<Gen> gens;
    FactoredUnit logs;

    bool is_zero() const { return gens.is_zero() && logs.is_zero(); }
    CoalgElem& operator+=(const CoalgElem& o) {
        gens += o.gens;
        logs += o.logs;
        return *this;
    }
    CoalgElem& operator-=(const CoalgElem& o) {
        gens -= o.gens;
        logs -= o.logs;
        return *this;
    }
    CoalgElem& operator*=(const Rat& c) {
        gens *= c;
        logs *= c;
        return *this;
    }
    friend CoalgElem operator+(CoalgElem a, const CoalgElem& b) { return a += b; }
    friend CoalgElem operator-(CoalgElem a, const CoalgElem& b) { return a -= b; }
    friend CoalgElem operator*(const Rat& c, CoalgElem a) { return a *= c; }
    friend bool operator==(const CoalgElem& a, const CoalgElem& b) {
        return a.gens == b.gens && a.logs == b.logs;
    }
    /// Maximal weight present (0 when zero).
    int weight() const {
        int w = logs.is_zero() ? 0 : 1;
        for (auto& [g, c] : gens.terms()) w = std::max(w, g.weight);
        return w;
    }
    /// Λ¹ embedding into the wedge algebra.
    WedgeElem as_wedge() const;
    std::string str() const;
};

// ---- canonicalizing constructors -------------------------------------------

/// log of a nonzero finite argument (weight 1).
CoalgElem log_elem(const Arg& x);
CoalgElem log_elem(const FactoredUnit& u);

/// [x]_2: the single weight-2 generator kind. Applies the degenerate
/// specializations [0]=[1]=[-1]=[∞]=0 and the inversion normalization
/// [x^{-1}] = -[x] (canonical orbit representative).
CoalgElem li2_elem(const Arg& x);

/// Li_n^C(x) for n >= 2 ([x]_n with [0] = [∞] = 0; n = 2 routes to li2_elem).
CoalgElem li_elem(int n, const Arg& x);

/// B-presentation generators: [x]_n (n = 2,3,4), [x,y]_{2,1}, [x,y]_{3,1}.
CoalgElem br_elem(int n, const Arg& x);
CoalgElem br21_elem(const Arg& x, const Arg& y);
CoalgElem br31_elem(const Arg& x, const Arg& y);

/// Multiple polylogarithm generator Li_{ns}(xs) (no cobracket until converted).
CoalgElem li_multi_elem(const std::vector<long>& ns, const std::vector<Arg>& xs);

/// Motivic iterated integral I(a0; w; aend), canonicalized (endpoint equality,
/// equal-letter collapse, weight-1 linearization with the I_1(a;a) = 0
/// convention, path reversal, weight-2 reduction to [.]_2).
CoalgElem iter_elem(const Arg& a0, const std::vector<Arg>& word, const Arg& aend,
                    const PointCtx& ctx);

/// Motivic correlator Cor(x0,...,xn), canonicalized (cyclic rotation, weight-1
/// log convention, weight-2 Li2 identity, degenerate-word collapse).
CoalgElem cor_elem(const std::vector<Arg>& word, const PointCtx& ctx);

}  // namespace plwb
