#include "plwb/gen.hpp"

#include <algorithm>
#include <sstream>

namespace plwb {

std::string Arg::str() const {
    if (is_inf()) return "inf";
    if (is_rat()) return to_string(q);
    return std::string(mono.sgn < 0 ? "-" : "") + unit_to_string(mono.unit);
}

std::string Gen::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::LiN: os << "Li" << ns[0] << "(" << args[0].str() << ")"; break;
        case Kind::BrN: os << "[" << args[0].str() << "]_" << ns[0]; break;
        case Kind::Br21: os << "[" << args[0].str() << "," << args[1].str() << "]_2,1"; break;
        case Kind::Br31: os << "[" << args[0].str() << "," << args[1].str() << "]_3,1"; break;
        case Kind::LiMulti: {
            os << "Li_";
            for (auto n : ns) os << n << ",";
            os << "(";
            for (auto& a : args) os << a.str() << ",";
            os << ")";
            break;
        }
        case Kind::Iter: {
            os << "I(" << args.front().str() << ";";
            for (std::size_t i = 1; i + 1 < args.size(); ++i) os << args[i].str() << ",";
            os << ";" << args.back().str() << ")";
            break;
        }
        case Kind::Cor: {
            os << "Cor(";
            for (auto& a : args) os << a.str() << ",";
            os << ")";
            break;
        }
        case Kind::LogDiff:
            os << "log(" << args[0].str() << " - " << args[1].str() << ")";
            break;
    }
    return os.str();
}

std::string CoalgElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [g, c] : gens.terms()) {
        os << (first ? "" : " + ") << to_string(c) << "*" << g.str();
        first = false;
    }
    for (auto& [u, c] : logs.terms()) {
        os << (first ? "" : " + ") << to_string(c) << "*log " << u.str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

WedgeElem CoalgElem::as_wedge() const {
    WedgeElem w;
    for (auto& [g, c] : gens.terms()) w.add({WKey::of_gen(g)}, c);
    for (auto& [u, c] : logs.terms()) w.add({WKey::of_unit(u)}, c);
    return w;
}

Arg arg_mul(const Arg& a, const Arg& b) {
    if (a.is_inf() || b.is_inf()) return Arg::infinity();
    if (a.is_rat() && b.is_rat()) return Arg::of_rat(a.q * b.q);
    if (a.is_zero() || b.is_zero()) return Arg::of_rat(Rat(0));
    auto as_signed = [](const Arg& x) {
        return x.is_mono() ? x.mono : factor_rational_signed(x.q);
    };
    return Arg::of_mono(as_signed(a) * as_signed(b));
}

Arg arg_ratio(const Arg& a, const Arg& b) {
    if (b.is_zero()) return Arg::infinity();
    if (b.is_inf()) return a.is_inf() ? Arg::of_rat(Rat(1)) : Arg::of_rat(Rat(0));
    if (a.is_inf()) return Arg::infinity();
    if (a.is_zero()) return Arg::of_rat(Rat(0));
    return arg_mul(a, b.inverse());
}

Arg arg_sub(const Arg& a, const Arg& b, const PointCtx& ctx) {
    if (a.is_inf() || b.is_inf()) return Arg::infinity();
    if (a.is_rat() && b.is_rat()) return Arg::of_rat(a.q - b.q);
    if (a == b) return Arg::of_rat(Rat(0));
    auto as_signed = [](const Arg& x) { return x.is_mono() ? x.mono : factor_rational_signed(x.q); };
    if (b.is_zero()) return a;
    if (a.is_zero()) return b.negated();
    return Arg::of_mono(monomial_diff(as_signed(a), as_signed(b), ctx));
}

Arg arg_one_minus(const Arg& a, const PointCtx& ctx) {
    if (a.is_inf()) return Arg::infinity();
    if (a.is_rat()) return Arg::of_rat(Rat(1) - a.q);
    return Arg::of_mono(one_minus(a.mono, ctx));
}

FactoredUnit arg_unit(const Arg& a) {
    if (a.is_inf() || a.is_zero()) throw errors::ZeroInput();
    if (a.is_rat()) return factor_rational(a.q);
    return a.mono.unit;
}

CoalgElem log_elem(const Arg& x) {
    CoalgElem e;
    if (x.is_inf() || x.is_zero() || x.is_one() || x.is_minus_one()) return e;
    e.logs = arg_unit(x);
    return e;
}

CoalgElem log_elem(const FactoredUnit& u) {
    CoalgElem e;
    e.logs = u;
    return e;
}

CoalgElem li2_elem(const Arg& x) {
    CoalgElem e;
    if (x.is_zero() || x.is_one() || x.is_minus_one() || x.is_inf()) return e;

    Arg rep = x;
    Rat c(1);
    if (x.is_rat()) {
        // Normalize along the full anharmonic orbit: [σx]_2 = χ(σ)[x]_2 for the
        // six-fold symmetry generated by [x^{-1}] = -[x] and [1-x] = -[x]
        // (degenerate five-term specializations defining B_2 = C_2).
        const Rat& q = x.q;
        std::vector<std::pair<Rat, int>> orbit = {
            {q, 1},
            {Rat(1) / q, -1},
            {Rat(1) - q, -1},
            {Rat(1) / (Rat(1) - q), 1},
            {(q - 1) / q, 1},
            {q / (q - 1), -1},
        };
        for (auto& [v, chi] : orbit)
            if (v == -1) return e;  // the orbit meets a 2-torsion class
        auto best = orbit[0];
        for (auto& cand : orbit)
            if (cand.first < best.first) best = cand;
        rep = Arg::of_rat(best.first);
        c = Rat(best.second);
    } else {
        // Monomial arguments: inversion normalization only (the complement is
        // not closed without a point context).
        Arg inv = x.inverse();
        if (inv < x) {
            rep = inv;
            c = Rat(-1);
        }
    }
    Gen g;
    g.kind = Gen::Kind::LiN;
    g.weight = 2;
    g.ns = {2};
    g.args = {rep};
    e.gens.add(g, c);
    return e;
}

CoalgElem li_elem(int n, const Arg& x) {
    if (n < 2) throw std::domain_error("li_elem: n >= 2");
    if (n == 2) return li2_elem(x);
    CoalgElem e;
    if (x.is_zero() || x.is_inf()) return e;
    Gen g;
    g.kind = Gen::Kind::LiN;
    g.weight = n;
    g.ns = {long(n)};
    g.args = {x};
    e.gens.add(g, Rat(1));
    return e;
}

CoalgElem br_elem(int n, const Arg& x) {
    if (n == 2) return li2_elem(x);
    if (n < 3 || n > 4) throw std::domain_error("br_elem: n in {2,3,4}");
    CoalgElem e;
    if (x.is_zero() || x.is_inf()) return e;
    Gen g;
    g.kind = Gen::Kind::BrN;
    g.weight = n;
    g.ns = {long(n)};
    g.args = {x};
    e.gens.add(g, Rat(1));
    return e;
}

CoalgElem br21_elem(const Arg& x, const Arg& y) {
    CoalgElem e;
    Gen g;
    g.kind = Gen::Kind::Br21;
    g.weight = 3;
    g.args = {x, y};
    e.gens.add(g, Rat(1));
    return e;
}

CoalgElem br31_elem(const Arg& x, const Arg& y) {
    CoalgElem e;
    Gen g;
    g.kind = Gen::Kind::Br31;
    g.weight = 4;
    g.args = {x, y};
    e.gens.add(g, Rat(1));
    return e;
}

CoalgElem li_multi_elem(const std::vector<long>& ns, const std::vector<Arg>& xs) {
    if (ns.size() != xs.size() || ns.empty()) throw std::domain_error("li_multi_elem: shape");
    if (ns.size() == 1) return li_elem(int(ns[0]), xs[0]);
    CoalgElem e;
    Gen g;
    g.kind = Gen::Kind::LiMulti;
    g.weight = 0;
    for (auto n : ns) g.weight += int(n);
    g.ns = ns;
    g.args = xs;
    e.gens.add(g, Rat(1));
    return e;
}

namespace {

// log(hi − lo) in F^x ⊗ Q. A zero difference is regularized to log of the
// given basepoint; log 0 and ∞-differences contribute nothing (tangential
// choice at ∞ dual to d(1/x)). Non-factorable monomial differences fall back
// to an opaque LogDiff generator for the numeric lane.
CoalgElem log_diff(const Arg& hi, const Arg& lo, const Arg& reg_point, const PointCtx& ctx) {
    if (hi.is_inf() || lo.is_inf()) return CoalgElem{};
    if (hi == lo) return log_elem(reg_point.is_inf() ? Arg::of_rat(Rat(0)) : reg_point);
    try {
        Arg d = arg_sub(hi, lo, ctx);
        if (d.is_zero()) return log_elem(reg_point.is_inf() ? Arg::of_rat(Rat(0)) : reg_point);
        return log_elem(d);
    } catch (const errors::NotClosed&) {
        CoalgElem e;
        Gen g;
        g.kind = Gen::Kind::LogDiff;
        g.weight = 1;
        g.args = {hi, lo};
        e.gens.add(g, Rat(1));
        return e;
    }
}

}  // namespace

CoalgElem iter_elem(const Arg& a0, const std::vector<Arg>& word, const Arg& aend,
                    const PointCtx& ctx) {
    CoalgElem zero;
    std::size_t n = word.size();
    if (n == 0) return zero;      // weight-0 scalar: dies in the coalgebra
    if (a0 == aend) return zero;  // constant path
    bool all_equal =
        std::all_of(word.begin(), word.end(), [&](const Arg& a) { return a == word[0]; });

    if (n == 1) {
        // I(a;b;c) = log(c−b) − log(a−b), regularized at its basepoints.
        CoalgElem e = log_diff(aend, word[0], aend, ctx);
        e -= log_diff(a0, word[0], a0, ctx);
        return e;
    }
    if (all_equal) return zero;  // power of a logarithm, a product

    // Path reversal: I(a0;w;a1) = (-1)^n I(a1; rev w; a0); keep the lex-min form.
    std::vector<Arg> fwd;
    fwd.push_back(a0);
    fwd.insert(fwd.end(), word.begin(), word.end());
    fwd.push_back(aend);
    std::vector<Arg> rev(fwd.rbegin(), fwd.rend());
    Rat coeff(1);
    const std::vector<Arg>* pick = &fwd;
    if (std::lexicographical_compare(rev.begin(), rev.end(), fwd.begin(), fwd.end())) {
        pick = &rev;
        if (n % 2 == 1) coeff = Rat(-1);
    }
    Arg b0 = pick->front(), bend = pick->back();
    std::vector<Arg> w(pick->begin() + 1, pick->end() - 1);

    if (n == 2) {
        // Affine normalization to I(0; p, q; 1), then the weight-2 dictionary.
        try {
            Arg span = arg_sub(bend, b0, ctx);
            Arg p = arg_ratio(arg_sub(w[0], b0, ctx), span);
            Arg q = arg_ratio(arg_sub(w[1], b0, ctx), span);
            CoalgElem e;
            if (p == q) return zero;
            if (q.is_zero()) {
                e = li2_elem(p.inverse());
                e *= Rat(-1);
            } else if (p.is_zero()) {
                e = li2_elem(q.inverse());
            } else {
                // I(0;p,q;1) = Li_{1,1}(q/p, 1/q)
                //            = Li_2(v(1−u)/(v−1)) − Li_2(v/(v−1)) − Li_2(uv), u=q/p, v=1/q
                Arg u = arg_ratio(q, p), v = q.inverse();
                Arg vm1 = arg_sub(v, Arg::of_rat(Rat(1)), ctx);
                e = li2_elem(arg_ratio(arg_mul(v, arg_one_minus(u, ctx)), vm1));
                e -= li2_elem(arg_ratio(v, vm1));
                e -= li2_elem(arg_mul(u, v));
            }
            e *= coeff;
            return e;
        } catch (const errors::NotClosed&) {
            // fall through: keep the word as an opaque generator
        } catch (const errors::ZeroInput&) {
        }
    }

    CoalgElem e;
    Gen g;
    g.kind = Gen::Kind::Iter;
    g.weight = int(n);
    g.args = *pick;
    e.gens.add(g, coeff);
    return e;
}

CoalgElem cor_elem(const std::vector<Arg>& word, const PointCtx& ctx) {
    CoalgElem zero;
    if (word.size() < 2) throw std::domain_error("cor_elem: needs >= 2 entries");
    std::size_t len = word.size();
    int weight = int(len) - 1;

    if (weight == 1) {
        // Cor(x0,x1) = log(x1 − x0), tangential convention at coincidence.
        return log_diff(word[1], word[0], word[0], ctx);
    }

    bool all_equal =
        std::all_of(word.begin(), word.end(), [&](const Arg& a) { return a == word[0]; });
    if (all_equal) return zero;
    long nonzero = 0;
    bool has_zero = false;
    for (auto& a : word) {
        if (a.is_zero())
            has_zero = true;
        else
            ++nonzero;
    }
    // A single nonzero letter: rotation and scaling send the word to a
    // degenerate depth-1 correlator, which vanishes.
    if (has_zero && nonzero <= 1) return zero;

    // Lexicographically minimal rotation.
    std::vector<Arg> best = word;
    std::vector<Arg> rot = word;
    for (std::size_t s = 1; s < len; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end()))
            best = rot;
    }

    if (weight == 2) {
        // Cor(x0,x1,x2) = Li_2((x1−x0)/(x2−x0)), applied at the canonical rotation.
        try {
            Arg num = arg_sub(best[1], best[0], ctx);
            Arg den = arg_sub(best[2], best[0], ctx);
            return li2_elem(arg_ratio(num, den));
        } catch (const errors::NotClosed&) {
            // keep as generator below
        }
    }

    CoalgElem e;
    Gen g;
    g.kind = Gen::Kind::Cor;
    g.weight = weight;
    g.args = best;
    e.gens.add(g, Rat(1));
    return e;
}

}  // namespace plwb
