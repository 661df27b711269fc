#pragma once

#include <algorithm>
#include <vector>

#include "plwb/lincomb.hpp"

namespace plwb {

namespace detail {

/// Sorts keys, returns the permutation parity (+1/−1), or 0 on a repeated key.
template <class K>
int sort_with_sign(std::vector<K>& keys) {
    int sign = 1;
    for (std::size_t i = 1; i < keys.size(); ++i) {
        for (std::size_t j = i; j > 0 && keys[j] < keys[j - 1]; --j) {
            std::swap(keys[j], keys[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (!(keys[i - 1] < keys[i])) return 0;
    return sign;
}

}  // namespace detail

/// Element of the exterior algebra Λ over the free Q-space on keys K,
/// canonicalized: strictly increasing tuples, antisymmetry by sorting with
/// sign, repeated keys vanish. Mixed exterior degrees are allowed.
template <class K>
class Wedge {
  public:
    using Tuple = std::vector<K>;
    using map_type = typename LinComb<Tuple>::map_type;

    Wedge() = default;
    static Wedge unit() {  // the empty wedge (scalar 1)
        Wedge w;
        w.add(Tuple{}, Rat(1));
        return w;
    }
    static Wedge single(const K& k, Rat c = Rat(1)) {
        Wedge w;
        w.add(Tuple{k}, std::move(c));
        return w;
    }
    static Wedge pair(K a, K b, Rat c = Rat(1)) {
        Wedge w;
        w.add(Tuple{std::move(a), std::move(b)}, std::move(c));
        return w;
    }

    void add(Tuple t, const Rat& c) {
        if (c == 0) return;
        int s = detail::sort_with_sign(t);
        if (s == 0) return;
        lc_.add(t, c * Rat(s));
    }

    const map_type& terms() const { return lc_.terms(); }
    bool is_zero() const { return lc_.is_zero(); }
    std::size_t size() const { return lc_.size(); }

    Wedge& operator+=(const Wedge& o) {
        for (auto& [t, c] : o.terms()) lc_.add(t, c);
        return *this;
    }
    Wedge& operator-=(const Wedge& o) {
        for (auto& [t, c] : o.terms()) lc_.add(t, -c);
        return *this;
    }
    Wedge& operator*=(const Rat& c) {
        lc_ *= c;
        return *this;
    }
    friend Wedge operator+(Wedge a, const Wedge& b) { return a += b; }
    friend Wedge operator-(Wedge a, const Wedge& b) { return a -= b; }
    friend Wedge operator*(Wedge a, const Rat& c) { return a *= c; }
    friend Wedge operator*(const Rat& c, Wedge a) { return a *= c; }
    friend Wedge operator-(Wedge a) { return a *= Rat(-1); }
    friend bool operator==(const Wedge& a, const Wedge& b) { return a.lc_ == b.lc_; }
    friend bool operator!=(const Wedge& a, const Wedge& b) { return !(a == b); }

    /// Exterior product.
    friend Wedge wedge(const Wedge& a, const Wedge& b) {
        Wedge r;
        for (auto& [ta, ca] : a.terms())
            for (auto& [tb, cb] : b.terms()) {
                Tuple t = ta;
                t.insert(t.end(), tb.begin(), tb.end());
                r.add(std::move(t), ca * cb);
            }
        return r;
    }

    Wedge degree_part(std::size_t k) const {
        Wedge r;
        for (auto& [t, c] : terms())
            if (t.size() == k) r.lc_.add(t, c);
        return r;
    }

    template <class F>
    Wedge filter(F&& pred) const {
        Wedge r;
        for (auto& [t, c] : terms())
            if (pred(t)) r.lc_.add(t, c);
        return r;
    }

  private:
    LinComb<Tuple> lc_;
};

}  // namespace plwb
