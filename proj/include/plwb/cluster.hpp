#pragma once

#include "plwb/assoc.hpp"
#include "plwb/points.hpp"
#include "plwb/poly.hpp"
#include "plwb/wedge.hpp"

namespace plwb {

struct FrozenVertex : std::domain_error {
    FrozenVertex() : std::domain_error("mutation at a frozen vertex") {}
};
struct NonMonomialSum : std::domain_error {
    NonMonomialSum() : std::domain_error("exchange sum is not a three-term Pluecker pattern") {}
};
struct BoundExceeded : std::domain_error {
    BoundExceeded() : std::domain_error("exchange graph exploration bound exceeded") {}
};
struct NotTriangulation : std::domain_error {
    NotTriangulation() : std::domain_error("dissection is not a triangulation") {}
};

/// Skew exchange matrix with frozen vertices.
struct Quiver {
    std::vector<std::vector<long>> b;  // b[i][j] = -b[j][i]
    std::set<int> frozen;

    std::size_t size() const { return b.size(); }
};

/// Cluster seed. Either the Pluecker backend (variables are signed atom
/// monomials, exchange sums normalized by the three-term identity) or the
/// generic backend (variables are Laurent polynomials in the initial cluster).
struct Seed {
    Quiver quiver;
    bool pluecker = true;
    std::vector<SignedUnit> pvars;
    std::vector<Poly> gvars;

    /// Canonical key: the sorted multiset of cluster variables.
    std::string canonical_key() const;
};

/// A2 seed of the generic backend: x1 -> x2.
Seed a2_seed();
/// Path quiver A_m with alternating or linear orientation, generic backend.
Seed a_path_seed(int m);

/// Seed attached to a triangulation: one vertex per side (frozen) and per
/// diagonal, variables |v_i,v_j|, a directed 3-cycle per triangle.
Seed seed_from_triangulation(const Dissection& t);

Seed mutate(const Seed& s, int k);

/// The exchange monomial X = prod_j u_j^{b_kj} (Pluecker backend).
SignedUnit x_monomial(const Seed& s, int k);

/// W = (1/2) sum b_ij u_i wedge u_j over atoms and primes.
Wedge<UnitKey> w_invariant(const Seed& s);

/// Exact check of W' - W = -(1+X) wedge X at vertex k.
bool verify_mutation_identity(const Seed& s, int k, const PointCtx& ctx);

struct ExchangeGraph {
    std::vector<Seed> seeds;                      // representatives, BFS order
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t pentagon_faces = 0;               // chordless 5-cycles
    std::size_t square_faces = 0;                 // chordless 4-cycles
};

/// BFS closure under unfrozen mutations, seeds canonicalized by their variable
/// multiset; throws BoundExceeded past max_seeds. The 2-face census is the
/// chordless-cycle count (heuristic geometry, flagged in reports).
ExchangeGraph exchange_graph(const Seed& s0, std::size_t max_seeds,
                             bool verify_w_identity = false, const PointCtx* ctx = nullptr);

}  // namespace plwb
