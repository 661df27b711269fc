#pragma once

#include <map>
#include <utility>

#include "plwb/rat.hpp"

namespace plwb {

/// Free Q-linear combination over an ordered basis key type.
/// Zero coefficients are never stored; keys are expected canonical on entry.
template <class K>
class LinComb {
  public:
    using map_type = std::map<K, Rat>;

    LinComb() = default;
    explicit LinComb(const K& k, Rat c = Rat(1)) {
        if (c != 0) terms_[k] = std::move(c);
    }

    const map_type& terms() const& { return terms_; }
    const map_type& terms() const&& = delete;  // no dangling off temporaries
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rat coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const K& k, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rat& c) { return a *= c; }
    friend LinComb operator*(const Rat& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rat(-1); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }
    friend bool operator<(const LinComb& a, const LinComb& b) { return a.terms_ < b.terms_; }

  private:
    map_type terms_;
};

}  // namespace plwb
