#include "plwb/poly.hpp"

#include <climits>
#include <set>
#include <sstream>

namespace plwb {

namespace {

Poly::Mono mono_mul(const Poly::Mono& a, const Poly::Mono& b) {
    Poly::Mono r = a;
    for (auto& [v, e] : b) {
        long ne = (r.count(v) ? r[v] : 0) + e;
        if (ne == 0)
            r.erase(v);
        else
            r[v] = ne;
    }
    return r;
}

// Lex monomial order (variable 1 strongest); multiplicative, so leading-term
// reduction of an exact quotient terminates.
bool mono_lex_less(const Poly::Mono& a, const Poly::Mono& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        int va = ia == a.end() ? INT_MAX : ia->first;
        int vb = ib == b.end() ? INT_MAX : ib->first;
        if (va < vb) {
            // a has a variable b lacks at the strongest position
            if (ia->second != 0) return ia->second < 0;
            ++ia;
        } else if (vb < va) {
            if (ib->second != 0) return ib->second > 0;
            ++ib;
        } else {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
    }
    return false;
}

// a / b when b divides a (all exponents of b <= those of a); nullopt otherwise.
std::optional<Poly::Mono> mono_div(const Poly::Mono& a, const Poly::Mono& b) {
    Poly::Mono r = a;
    for (auto& [v, e] : b) {
        long have = r.count(v) ? r[v] : 0;
        long ne = have - e;
        if (ne < 0) return std::nullopt;
        if (ne == 0)
            r.erase(v);
        else
            r[v] = ne;
    }
    return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly r = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<Poly> Poly::div_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return Poly();

    // Clear Laurent shifts: multiply both by monomials making exponents nonnegative.
    Mono shift_n, shift_d;
    auto min_exps = [](const Poly& p, Mono& sh) {
        for (auto& [m, c] : p.terms_)
            for (auto& [v, e] : m)
                if (e < 0) {
                    auto it = sh.find(v);
                    if (it == sh.end() || e < it->second) sh[v] = e;
                }
    };
    min_exps(num, shift_n);
    min_exps(den, shift_d);
    auto clear = [](const Poly& p, const Mono& sh) {
        Mono neg;
        for (auto& [v, e] : sh) neg[v] = -e;
        Poly r;
        for (auto& [m, c] : p.terms_) r.add_term(mono_mul(m, neg), c);
        return r;
    };
    Poly a = clear(num, shift_n);
    Poly b = clear(den, shift_d);

    // Leading-term reduction in a genuine monomial order; exact division
    // strips the cofactor's leading term each step.
    auto leading = [](const Poly& p) {
        auto best = p.terms_.begin();
        for (auto it = std::next(p.terms_.begin()); it != p.terms_.end(); ++it)
            if (mono_lex_less(best->first, it->first)) best = it;
        return best;
    };
    Poly q;
    Poly rem = a;
    const auto bt = leading(b);
    while (!rem.is_zero()) {
        const auto rt = leading(rem);
        auto m = mono_div(rt->first, bt->first);
        if (!m) return std::nullopt;
        Rat c = rt->second / bt->second;
        Poly t;
        t.add_term(*m, c);
        q += t;
        rem -= t * b;
    }
    // Undo the shifts: num/den = (a / x^sn) / (b / x^sd) = (a/b) * x^(sd-sn).
    Mono adjust;
    for (auto& [v, e] : shift_d) adjust[v] += -e;
    for (auto& [v, e] : shift_n) {
        adjust[v] += e;
        if (adjust[v] == 0) adjust.erase(v);
    }
    if (adjust.empty()) return q;
    Poly shifted;
    for (auto& [m, c] : q.terms_) shifted.add_term(mono_mul(m, adjust), c);
    return shifted;
}

std::optional<Poly> Poly::laurent_div_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return Poly();
    // Collect the variables of the divisor; pad the numerator by increasing
    // powers of their product until ordinary division succeeds.
    std::set<int> vars;
    for (auto& [m, c] : den.terms())
        for (auto& [v, e] : m) vars.insert(v);
    Poly shift = Poly::constant(Rat(1));
    Mono inv_m;
    for (int pad = 0; pad <= 16; ++pad) {
        auto q = div_exact(num * shift, den);
        if (q) {
            Poly r;
            for (auto& [m, c] : q->terms()) {
                Mono adjusted = m;
                for (auto& [v, e] : inv_m) {
                    adjusted[v] += e;
                    if (adjusted[v] == 0) adjusted.erase(v);
                }
                r.add_term(adjusted, c);
            }
            return r;
        }
        for (int v : vars) {
            Mono step;
            step[v] = 1;
            Poly f;
            f.add_term(step, Rat(1));
            shift = shift * f;
            inv_m[v] -= 1;
        }
    }
    return std::nullopt;
}

Rat Poly::eval(const std::map<int, Rat>& assign) const {
    Rat total(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, e] : m) {
            auto it = assign.find(v);
            if (it == assign.end()) throw errors::UnassignedPoint();
            if (it->second == 0 && e < 0) throw errors::DegenerateAtom();
            Rat base = it->second;
            long ee = e;
            Rat pw(1);
            Rat b = ee < 0 ? Rat(1) / base : base;
            for (long k = 0; k < (ee < 0 ? -ee : ee); ++k) pw *= b;
            t *= pw;
        }
        total += t;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (auto& [v, e] : m) {
            os << "*x" << v;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace plwb
