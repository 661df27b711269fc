#pragma once

#include "plwb/gen.hpp"

namespace plwb {

struct BadBidegree : std::domain_error {
    BadBidegree() : std::domain_error("bidegree does not split the weight") {}
};

/// Exterior product of two coalgebra elements.
WedgeElem wedge_cc(const CoalgElem& a, const CoalgElem& b);

/// Lie cobracket of a generator (exact transcription of the weight <= 4
/// formulas, the iterated-integral cut formula, and the correlator disk-cut
/// formula). Weight-1 subsymbols are emitted with the fixed regularization
/// conventions. LiMulti must be converted to an iterated integral first.
WedgeElem cobracket(const Gen& g, const PointCtx& ctx);
WedgeElem cobracket(const CoalgElem& e, const PointCtx& ctx);

/// Projection of a Λ² element to the C_p ∧ C_q stratum (p >= q >= 1).
WedgeElem wedge_component(const WedgeElem& w, int p, int q);

/// δ_{p,q} of a coalgebra element.
WedgeElem cobracket_component(const CoalgElem& e, int p, int q, const PointCtx& ctx);

/// Chevalley-Eilenberg differential: graded-derivation extension of δ with
/// sign (-1)^{i-1} on the i-th wedge slot.
WedgeElem ce_differential(const WedgeElem& chain, const PointCtx& ctx);

/// Number of raw cut terms the cobracket of a weight-n iterated integral
/// enumerates before cancellation.
std::size_t iter_cut_count(int n);

// ---- conversions between presentations (explicit operations) ---------------

/// I_{n_1..n_r}(a_1..a_r; a_{r+1}) = (-1)^r I(0; a_1 0^{n_1-1} ... ; a_{r+1}).
CoalgElem iter_from_indices(const std::vector<long>& ns, const std::vector<Arg>& as,
                            const Arg& aend, const PointCtx& ctx);

/// The iterated-integral form of Li_{ns}(xs).
CoalgElem li_to_iter(const std::vector<long>& ns, const std::vector<Arg>& xs,
                     const PointCtx& ctx);

/// Decodes a word-form generator back to (ns, as, aend); nullopt when the word
/// is not of the I_{n_1..n_r} shape.
struct IterIndices {
    std::vector<long> ns;
    std::vector<Arg> as;
    Arg aend;
    int sign = 1;  // relative to the stored orientation
};
std::optional<IterIndices> decode_iter(const Gen& g);

/// Li_{ns}(a_2/a_1, ..., a_{r+1}/a_r) from index form.
CoalgElem iter_to_li(const std::vector<long>& ns, const std::vector<Arg>& as, const Arg& aend);

/// Li_n^C(x) = -Cor^C(0,...,0,1,x): returns the correlator side, whose
/// canonical form matches li_elem(n,x) under the declared identification.
CoalgElem cor_to_li_depth1(int n, const Arg& x, const PointCtx& ctx);

/// Explicitly applies the depth-1 identification Cor(0^{k-1},1,y) -> -[y]_k to
/// every correlator key of the wedge (up to rotation).
WedgeElem reduce_depth1(const WedgeElem& w);

}  // namespace plwb
