#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "plwb/real.hpp"

namespace plwb {

inline constexpr const char* kToolVersion = "plwb 0.1.0";

/// Machine-replayable verification record.
struct Report {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    struct Case {
        nlohmann::ordered_json inputs;
        std::string residual;  // decimal string, explicit precision tag in the report
        std::string witness;
        bool pass = true;
    };
    std::vector<Case> cases;
    long precision_bits = 128;

    void add_case(nlohmann::ordered_json inputs, const Real& residual, bool pass,
                  std::string witness = "");
    void add_case(nlohmann::ordered_json inputs, const std::string& residual, bool pass,
                  std::string witness = "");
    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

/// Deterministic PRNG (splitmix64) so identical params + seed give byte-identical
/// case lists across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    long uniform(long lo, long hi);  // inclusive
    Rat rational(long span, long max_den);
    /// Nonzero rational away from {0,1} with an exact margin.
    Rat generic_rational(long span = 20, long max_den = 7);

  private:
    std::uint64_t state_;
};

}  // namespace plwb
