#include "plwb/real.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace plwb {

std::string Real::str(int digits10) const {
    if (digits10 <= 0) digits10 = int(double(prec()) * 0.30103) + 2;
    if (mpfr_zero_p(x_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits10, x_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    bool neg = !digits.empty() && digits[0] == '-';
    std::string mant = neg ? digits.substr(1) : digits;
    std::string out = (neg ? "-0." : "0.") + mant + "e" + std::to_string(long(e));
    return out;
}

}  // namespace plwb
