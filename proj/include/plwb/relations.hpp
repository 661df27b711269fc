#pragma once

#include <array>

#include "plwb/coalg.hpp"
#include "plwb/linalg.hpp"

namespace plwb {

struct DegenerateTuple : std::domain_error {
    DegenerateTuple() : std::domain_error("tuple not in generic position") {}
};
struct BadArgument : std::domain_error {
    BadArgument() : std::domain_error("argument outside the allowed domain") {}
};

enum class RelTag {
    FiveTermBirapport,
    FiveTermCyclic,
    InversionN,
    Br21Elim,
    Q3,
    Goncharov22,
    Q4,
    Gangl31,
};

std::string rel_tag_name(RelTag t);

/// A relation instance: the element that should vanish, plus provenance.
struct RelationInstance {
    RelTag tag;
    std::vector<Arg> params;
    CoalgElem element;
};

/// Σ_i (-1)^i [r(a_0..â_i..a_4)]_2 with r the birapport; degenerate
/// specializations collapse via the [0]=[1]=[∞]=0 conventions.
RelationInstance five_term_birapport(const std::array<Ext, 5>& a);

/// The cyclic r_2 form of the five-term relation.
RelationInstance five_term_cyclic(const std::array<Ext, 5>& x);

/// [x]_n + (-1)^n [x^{-1}]_n, n in 2..6.
RelationInstance inversion_rel(int n, const Rat& x);

/// [x,y]_{2,1} − its [.]_3 elimination.
RelationInstance br21_elimination(const Arg& x, const Arg& y, const PointCtx& ctx);

/// The Q3 relation element (B/C presentation, weight 3) over a rational 6-tuple.
RelationInstance q3_relation(const std::array<Ext, 6>& x);

/// Q3 with every [.,.]_{2,1} replaced by its elimination: the 22-term relation.
RelationInstance goncharov22(const std::array<Ext, 6>& x);

/// The Q4 relation element (weight 4) over formal polygon points 1..7.
RelationInstance q4_relation(const PointCtx& ctx);
/// Q4 over rational points.
RelationInstance q4_relation_rational(const std::array<Ext, 7>& x);

/// Σ_i (-1)^i I_{3,1}(r(x_0..x̂_i..x_4), y; 1).
CoalgElem gangl_combination(const std::array<Ext, 5>& x, const Rat& y);

struct GanglCheck {
    bool pass = false;
    WedgeElem lhs;  // δ_{2,2} of the combination
    WedgeElem rhs;  // −(five-term image under [.]_2) ∧ [y]_2
};
/// Exact check δ_{2,2}(gangl_combination) = −(five-term) ∧ [y]_2.
GanglCheck gangl_delta22_check(const std::array<Ext, 5>& x, const Rat& y);

/// Matrix of δ restricted to the span of the given generators; columns indexed
/// by the canonical Λ² wedge basis encountered.
struct DeltaMatrix {
    std::vector<std::vector<WKey>> columns;  // canonical Λ² tuples
    QMatrix rows;                            // one row per generator
};
DeltaMatrix delta_matrix(const std::vector<CoalgElem>& generators, const PointCtx& ctx);

/// Kernel of the δ-matrix as exact coefficient vectors over the generators.
std::vector<QVector> delta_kernel(const std::vector<CoalgElem>& generators, const PointCtx& ctx);

}  // namespace plwb
