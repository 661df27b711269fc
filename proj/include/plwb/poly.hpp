#pragma once

#include <map>
#include <optional>
#include <string>

#include "plwb/rat.hpp"

namespace plwb {

/// Sparse multivariate (Laurent) polynomial over Q. Variables are small integer
/// ids; exponents may be negative, which plain ring operations tolerate.
class Poly {
  public:
    using Mono = std::map<int, long>;  // var -> exponent, no zero entries

    Poly() = default;
    static Poly constant(const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[Mono{}] = c;
        return p;
    }
    static Poly var(int v, long e = 1) {
        Poly p;
        Mono m;
        if (e != 0) m[v] = e;
        p.terms_[m] = 1;
        return p;
    }

    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("Poly: not constant");
        return terms_.begin()->second;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly::constant(Rat(-1)) * a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

    Poly pow(long e) const;

    /// Exact division; nullopt when the divisor does not divide exactly.
    /// Handles Laurent inputs by clearing monomial shifts first.
    static std::optional<Poly> div_exact(const Poly& num, const Poly& den);

    /// Exact division in the Laurent ring: the quotient may carry a monomial
    /// denominator (cluster exchange relations live here).
    static std::optional<Poly> laurent_div_exact(const Poly& num, const Poly& den);

    Rat eval(const std::map<int, Rat>& assign) const;

    std::string str() const;

  private:
    std::map<Mono, Rat> terms_;
};

}  // namespace plwb
