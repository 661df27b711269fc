#include "plwb/coalg.hpp"

#include <algorithm>

namespace plwb {

WedgeElem wedge_cc(const CoalgElem& a, const CoalgElem& b) {
    return wedge(a.as_wedge(), b.as_wedge());
}

namespace {

WedgeElem cobracket_li(int n, const Arg& x, const PointCtx& ctx) {
    // δ[x]_2 = -(1-x) ∧ x;  δ[x]_n = [x]_{n-1} ∧ x.
    try {
        if (n == 2) {
            CoalgElem om = log_elem(arg_one_minus(x, ctx));
            return -wedge_cc(om, log_elem(x));
        }
        return wedge_cc(li_elem(n - 1, x), log_elem(x));
    } catch (const errors::NotClosed&) {
        throw UnfactorableArgument();
    }
}

WedgeElem cobracket_br(int n, const Arg& x, const PointCtx& ctx) {
    if (n == 2) return cobracket_li(2, x, ctx);
    try {
        CoalgElem lower = br_elem(n - 1, x);
        return wedge_cc(lower, log_elem(x));
    } catch (const errors::NotClosed&) {
        throw UnfactorableArgument();
    }
}

WedgeElem cobracket_br21(const Arg& x, const Arg& y, const PointCtx& ctx) {
    // δ[x,y]_{2,1} = [(1-y)/(1-x)]_2 ∧ (y/x) + [y/x]_2 ∧ (1-y)/(1-x)
    //              + [x]_2 ∧ (1-y^{-1}) + [y]_2 ∧ (1-x^{-1})
    try {
        Arg omx = arg_one_minus(x, ctx), omy = arg_one_minus(y, ctx);
        Arg ratio_om = arg_ratio(omy, omx), ratio_yx = arg_ratio(y, x);
        Arg om_inv_y = arg_one_minus(y.inverse(), ctx), om_inv_x = arg_one_minus(x.inverse(), ctx);
        WedgeElem w;
        w += wedge_cc(li2_elem(ratio_om), log_elem(ratio_yx));
        w += wedge_cc(li2_elem(ratio_yx), log_elem(ratio_om));
        w += wedge_cc(li2_elem(x), log_elem(om_inv_y));
        w += wedge_cc(li2_elem(y), log_elem(om_inv_x));
        return w;
    } catch (const errors::NotClosed&) {
        throw UnfactorableArgument();
    }
}

WedgeElem cobracket_br31(const Arg& x, const Arg& y, const PointCtx& ctx) {
    // δ[x,y]_{3,1} = [x,y]_{2,1} ∧ (x/y) + [x/y]_3 ∧ (1-x)/(1-y)
    //              + [x]_3 ∧ (1-y^{-1}) - [y]_3 ∧ (1-x^{-1}) + [x]_2 ∧ [y]_2.
    // The (2,2) sign is the one forced by co-Jacobi (d∘d = 0 on [x,y]_{3,1}
    // holds literally with it) and by the disk-cut cobracket of the
    // correlator presentation -Cor(0,0,x,1,y).
    try {
        Arg omx = arg_one_minus(x, ctx), omy = arg_one_minus(y, ctx);
        WedgeElem w;
        w += wedge_cc(br21_elem(x, y), log_elem(arg_ratio(x, y)));
        w += wedge_cc(br_elem(3, arg_ratio(x, y)), log_elem(arg_ratio(omx, omy)));
        w += wedge_cc(br_elem(3, x), log_elem(arg_one_minus(y.inverse(), ctx)));
        w -= wedge_cc(br_elem(3, y), log_elem(arg_one_minus(x.inverse(), ctx)));
        w += wedge_cc(li2_elem(x), li2_elem(y));
        return w;
    } catch (const errors::NotClosed&) {
        throw UnfactorableArgument();
    }
}

WedgeElem cobracket_iter(const Gen& g, const PointCtx& ctx) {
    // δ I(a_0; a_1..a_n; a_{n+1}) = Σ_{cuts} I(a_0; .. a_i, a_j .. ; a_{n+1})
    //                                        ∧ I(a_i; a_{i+1}..a_{j-1}; a_j)
    const std::vector<Arg>& a = g.args;
    long n = long(a.size()) - 2;
    WedgeElem w;
    for (long i = 0; i <= n; ++i) {
        for (long j = i + 2; j <= n + 1; ++j) {
            if (i == 0 && j == n + 1) continue;  // total cut: weight-0 cofactor
            std::vector<Arg> outer_word;
            for (long t = 1; t <= i; ++t) outer_word.push_back(a[t]);
            for (long t = j; t <= n; ++t) outer_word.push_back(a[t]);
            std::vector<Arg> inner_word;
            for (long t = i + 1; t <= j - 1; ++t) inner_word.push_back(a[t]);
            CoalgElem outer = iter_elem(a[0], outer_word, a[n + 1], ctx);
            if (outer.is_zero()) continue;
            CoalgElem inner = iter_elem(a[i], inner_word, a[j], ctx);
            if (inner.is_zero()) continue;
            w += wedge_cc(outer, inner);
        }
    }
    return w;
}

WedgeElem cobracket_cor(const Gen& g, const PointCtx& ctx) {
    // δ Cor(x_0..x_n) = Σ_{j,k: k≠j, k≠j-1} Cor(x_j..x_k) ∧ Cor(x_k..x_{j-1});
    // the cuts in a disk.
    const std::vector<Arg>& a = g.args;
    long len = long(a.size());
    WedgeElem w;
    auto arc = [&](long from, long to) {  // inclusive, cyclic
        std::vector<Arg> word;
        for (long t = from;; t = (t + 1) % len) {
            word.push_back(a[t]);
            if (t == to) break;
        }
        return word;
    };
    for (long j = 0; j < len; ++j) {
        for (long k = 0; k < len; ++k) {
            if (k == j || k == (j - 1 + len) % len) continue;
            CoalgElem first = cor_elem(arc(j, k), ctx);
            if (first.is_zero()) continue;
            CoalgElem second = cor_elem(arc(k, (j - 1 + len) % len), ctx);
            if (second.is_zero()) continue;
            w += wedge_cc(first, second);
        }
    }
    return w;
}

}  // namespace

WedgeElem cobracket(const Gen& g, const PointCtx& ctx) {
    switch (g.kind) {
        case Gen::Kind::LogDiff: return {};
        case Gen::Kind::LiN: return cobracket_li(int(g.ns[0]), g.args[0], ctx);
        case Gen::Kind::BrN: return cobracket_br(int(g.ns[0]), g.args[0], ctx);
        case Gen::Kind::Br21: return cobracket_br21(g.args[0], g.args[1], ctx);
        case Gen::Kind::Br31: return cobracket_br31(g.args[0], g.args[1], ctx);
        case Gen::Kind::Iter: return cobracket_iter(g, ctx);
        case Gen::Kind::Cor: return cobracket_cor(g, ctx);
        case Gen::Kind::LiMulti:
            throw UnsupportedGenerator("cobracket of LiMulti: convert via li_to_iter first");
    }
    return {};
}

WedgeElem cobracket(const CoalgElem& e, const PointCtx& ctx) {
    WedgeElem w;
    for (auto& [g, c] : e.gens.terms()) w += cobracket(g, ctx) * c;
    return w;  // weight-1 logs are primitive
}

WedgeElem wedge_component(const WedgeElem& w, int p, int q) {
    if (p < q || q < 1) throw BadBidegree();
    return w.filter([&](const std::vector<WKey>& t) {
        if (t.size() != 2) return false;
        int w1 = t[0].weight(), w2 = t[1].weight();
        return (w1 == p && w2 == q) || (w1 == q && w2 == p);
    });
}

WedgeElem cobracket_component(const CoalgElem& e, int p, int q, const PointCtx& ctx) {
    int total = e.weight();
    if (total > 0 && p + q != total) throw BadBidegree();
    return wedge_component(cobracket(e, ctx), p, q);
}

WedgeElem ce_differential(const WedgeElem& chain, const PointCtx& ctx) {
    WedgeElem out;
    for (auto& [tuple, c] : chain.terms()) {
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i].is_unit) continue;  // weight-1 keys are primitive
            WedgeElem delta = cobracket(tuple[i].gen, ctx);
            if (delta.is_zero()) continue;
            std::vector<WKey> rest;
            for (std::size_t t = 0; t < tuple.size(); ++t)
                if (t != i) rest.push_back(tuple[t]);
            Rat sign = (i % 2 == 0) ? c : -c;
            for (auto& [pair_keys, c2] : delta.terms()) {
                std::vector<WKey> merged = pair_keys;
                merged.insert(merged.end(), rest.begin(), rest.end());
                out.add(std::move(merged), sign * c2);
            }
        }
    }
    return out;
}

std::size_t iter_cut_count(int n) {
    // pairs 0 <= i < j <= n+1 with j - i >= 2, excluding (0, n+1)
    std::size_t total = std::size_t(n + 2) * std::size_t(n + 1) / 2;
    return total - std::size_t(n + 1) - 1;
}

CoalgElem iter_from_indices(const std::vector<long>& ns, const std::vector<Arg>& as,
                            const Arg& aend, const PointCtx& ctx) {
    if (ns.size() != as.size() || ns.empty()) throw std::domain_error("iter_from_indices: shape");
    for (auto& a : as)
        if (a.is_zero()) throw errors::ZeroInput();
    std::vector<Arg> word;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        word.push_back(as[i]);
        for (long t = 1; t < ns[i]; ++t) word.push_back(Arg::of_rat(Rat(0)));
    }
    CoalgElem e = iter_elem(Arg::of_rat(Rat(0)), word, aend, ctx);
    if (ns.size() % 2 == 1) e *= Rat(-1);
    return e;
}

CoalgElem li_to_iter(const std::vector<long>& ns, const std::vector<Arg>& xs,
                     const PointCtx& ctx) {
    if (ns.size() != xs.size() || ns.empty()) throw std::domain_error("li_to_iter: shape");
    std::vector<Arg> as;
    Arg prod = Arg::of_rat(Rat(1));
    as.push_back(prod);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        prod = arg_mul(prod, xs[i]);
        as.push_back(prod);
    }
    Arg aend = arg_mul(prod, xs.back());
    return iter_from_indices(ns, as, aend, ctx);
}

std::optional<IterIndices> decode_iter(const Gen& g) {
    if (g.kind != Gen::Kind::Iter) return std::nullopt;
    auto attempt = [](const std::vector<Arg>& a, int sign) -> std::optional<IterIndices> {
        if (!a.front().is_zero()) return std::nullopt;
        std::vector<Arg> letters(a.begin() + 1, a.end() - 1);
        if (letters.empty() || letters[0].is_zero()) return std::nullopt;
        IterIndices out;
        out.aend = a.back();
        out.sign = sign;
        for (std::size_t i = 0; i < letters.size();) {
            if (letters[i].is_zero()) return std::nullopt;
            out.as.push_back(letters[i]);
            long n = 1;
            ++i;
            while (i < letters.size() && letters[i].is_zero()) {
                ++n;
                ++i;
            }
            out.ns.push_back(n);
        }
        if (out.as.size() % 2 == 1) out.sign = -out.sign;  // the (-1)^r prefactor
        return out;
    };
    if (auto r = attempt(g.args, 1)) return r;
    std::vector<Arg> rev(g.args.rbegin(), g.args.rend());
    int sign = (g.weight % 2 == 1) ? -1 : 1;  // path reversal
    return attempt(rev, sign);
}

CoalgElem iter_to_li(const std::vector<long>& ns, const std::vector<Arg>& as, const Arg& aend) {
    std::vector<Arg> xs;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const Arg& hi = (i + 1 < as.size()) ? as[i + 1] : aend;
        xs.push_back(arg_ratio(hi, as[i]));
    }
    return li_multi_elem(ns, xs);
}

CoalgElem cor_to_li_depth1(int n, const Arg& x, const PointCtx& ctx) {
    if (n < 1) throw std::domain_error("cor_to_li_depth1: n >= 1");
    std::vector<Arg> word;
    for (int t = 0; t < n - 1; ++t) word.push_back(Arg::of_rat(Rat(0)));
    word.push_back(Arg::of_rat(Rat(1)));
    word.push_back(x);
    CoalgElem e = cor_elem(word, ctx);
    e *= Rat(-1);
    return e;
}

WedgeElem reduce_depth1(const WedgeElem& w) {
    WedgeElem out;
    for (auto& [tuple, c] : w.terms()) {
        // Rewrite each depth-1-pattern correlator key; accumulate the sign.
        std::vector<WKey> keys = tuple;
        Rat coeff = c;
        for (auto& k : keys) {
            if (k.is_unit || k.gen.kind != Gen::Kind::Cor) continue;
            const auto& a = k.gen.args;
            std::size_t len = a.size();
            for (std::size_t rot = 0; rot < len; ++rot) {
                bool match = true;
                for (std::size_t t = 0; t + 2 < len && match; ++t)
                    if (!a[(rot + t) % len].is_zero()) match = false;
                if (!match || !a[(rot + len - 2) % len].is_one()) continue;
                Arg y = a[(rot + len - 1) % len];
                CoalgElem li = li_elem(int(len) - 1, y);
                li *= Rat(-1);
                if (li.is_zero()) {
                    coeff = 0;
                } else {
                    auto& [g2, c2] = *li.gens.terms().begin();
                    k = WKey::of_gen(g2);
                    coeff *= c2;
                }
                break;
            }
            if (coeff == 0) break;
        }
        if (coeff != 0) out.add(std::move(keys), coeff);
    }
    return out;
}

}  // namespace plwb
