#include "plwb/unit.hpp"

#include <sstream>

namespace plwb {

FactoredUnit factor_rational(const Rat& q) {
    return factor_rational_signed(q).unit;
}

SignedUnit factor_rational_signed(const Rat& q) {
    if (q == 0) throw errors::ZeroInput();
    FactoredUnit u;
    for (auto& [p, e] : factor_integer(abs(q.get_num()))) u.add(UnitKey::make_prime(p), Rat(e));
    for (auto& [p, e] : factor_integer(q.get_den())) u.add(UnitKey::make_prime(p), Rat(-long(e)));
    return SignedUnit(std::move(u), sgn(q));
}

Rat unit_value_abs(const FactoredUnit& u) {
    Rat v(1);
    for (auto& [k, e] : u.terms()) {
        if (k.kind != UnitKey::Kind::Prime || !is_integer(e))
            throw std::domain_error("unit_value_abs: not an integral prime monomial");
        long ee = e.get_num().get_si();
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), k.prime.get_mpz_t(), static_cast<unsigned long>(ee < 0 ? -ee : ee));
        if (ee >= 0)
            v *= Rat(pw);
        else
            v /= Rat(pw);
    }
    return v;
}

bool is_prime_supported(const FactoredUnit& u) {
    for (auto& [k, e] : u.terms())
        if (k.kind != UnitKey::Kind::Prime) return false;
    return true;
}

bool has_integer_exponents(const FactoredUnit& u) {
    for (auto& [k, e] : u.terms())
        if (!is_integer(e)) return false;
    return true;
}

std::string unit_to_string(const FactoredUnit& u) {
    if (u.is_zero()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, e] : u.terms()) {
        if (!first) os << "*";
        first = false;
        os << k.str();
        if (e != 1) os << "^" << to_string(e);
    }
    return os.str();
}

}  // namespace plwb
