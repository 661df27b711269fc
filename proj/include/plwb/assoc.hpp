#pragma once

#include <map>
#include <set>
#include <vector>

#include "plwb/lincomb.hpp"
#include "plwb/linalg.hpp"

namespace plwb {

using Diagonal = std::pair<int, int>;  // (i,j), 1-based, i < j, non-adjacent

/// Noncrossing dissection of a convex n-gon; the faces of the associahedron.
/// degree = (n-3) - |diagonals| is the dimension of the face.
struct Dissection {
    int n = 3;
    std::set<Diagonal> diagonals;

    int degree() const { return n - 3 - int(diagonals.size()); }
    bool is_triangulation() const { return degree() == 0; }
    friend bool operator<(const Dissection& a, const Dissection& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.diagonals < b.diagonals;
    }
    friend bool operator==(const Dissection& a, const Dissection& b) {
        return a.n == b.n && a.diagonals == b.diagonals;
    }
};

using ChainA = LinComb<Dissection>;

bool diagonals_cross(const Diagonal& a, const Diagonal& b);
bool is_valid_diagonal(int n, const Diagonal& d);

/// All diagonals of the n-gon, lexicographic.
std::vector<Diagonal> polygon_diagonals(int n);

/// All dissections with exactly k diagonals.
std::vector<Dissection> enumerate_dissections(int n, int k);

/// All dissections grouped by diagonal count.
std::vector<std::vector<Dissection>> all_dissections(int n);

/// The cells (sub-polygons) of a dissection, each as its cyclically ordered
/// ambient vertex list; this is the operadic splitting, the position in the
/// list being the relabeling map of the standard cell polygon.
std::vector<std::vector<int>> operadic_split(const Dissection& d);

/// Diagonals that can be added while keeping the dissection noncrossing.
std::vector<Diagonal> addable_diagonals(const Dissection& d);

/// All triangulations refining d.
std::vector<Dissection> refinements(const Dissection& d);

/// Loday's integer coordinates of the vertex (triangulation) t.
QVector loday_vertex(const Dissection& t);

/// Geometric boundary of the cell: signs are incidence numbers computed
/// exactly from the Loday realization, so ∂∘∂ = 0 by construction and 1-cells
/// are differences of their endpoints.
ChainA boundary(const Dissection& d);
ChainA boundary(const ChainA& c);

/// Incidence sign of the codimension-1 pair (d, d + extra).
int incidence_sign(const Dissection& d, const Diagonal& extra);

/// Flip of a diagonal in a triangulation.
Dissection flip(const Dissection& t, const Diagonal& d);

struct FaceCensus {
    std::vector<std::size_t> by_degree;  // counts per degree 0..n-3
    std::size_t pentagons = 0;           // 2-faces with a pentagon cell
    std::size_t squares = 0;             // 2-faces that are products of two quads
};
FaceCensus face_census(int n);

}  // namespace plwb
