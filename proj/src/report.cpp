#include "plwb/report.hpp"

namespace plwb {

void Report::add_case(nlohmann::ordered_json inputs, const Real& residual, bool pass,
                      std::string witness) {
    cases.push_back({std::move(inputs), residual.str(20), std::move(witness), pass});
}

void Report::add_case(nlohmann::ordered_json inputs, const std::string& residual, bool pass,
                      std::string witness) {
    cases.push_back({std::move(inputs), residual, std::move(witness), pass});
}

bool Report::all_pass() const {
    for (auto& c : cases)
        if (!c.pass) return false;
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params;
    auto arr = nlohmann::ordered_json::array();
    double max_residual = -1e18;
    for (auto& c : cases) {
        nlohmann::ordered_json cj;
        cj["inputs"] = c.inputs;
        cj["residual"] = c.residual;
        cj["witness"] = c.witness;
        cj["pass"] = c.pass;
        arr.push_back(cj);
        try {
            double r = std::stod(c.residual);
            if (r > max_residual) max_residual = r;
        } catch (...) {
        }
    }
    j["cases"] = arr;
    j["summary"] = {{"pass", all_pass()}, {"max_residual", max_residual}};
    j["precision_bits"] = precision_bits;
    j["version"] = kToolVersion;
    return j;
}

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    return lo + long(next() % std::uint64_t(hi - lo + 1));
}

Rat Rng::rational(long span, long max_den) {
    long num = uniform(-span, span);
    long den = uniform(1, max_den);
    return rat(num, den);
}

Rat Rng::generic_rational(long span, long max_den) {
    while (true) {
        Rat q = rational(span, max_den);
        if (q != 0 && q != 1) return q;
    }
}

}  // namespace plwb
