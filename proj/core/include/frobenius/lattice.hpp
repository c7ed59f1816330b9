/**
 * @file lattice.hpp
 * @brief The rank-2 lattice of height-zero integer vectors attached to a
 *        triple of generators, and Lagrange reduction of its bases.
 *
 * The key objects: for generators a = (a1, a2, a3) the height of
 * x in Z^3 is a1*x1 + a2*x2 + a3*x3, and the lattice is the set of
 * integer points of height zero. Distances are measured by a quadratic
 * form chosen so that the traces of the height-zero plane on the three
 * coordinate planes meet pairwise at 60 degrees; under that metric the
 * reduced basis aligns with the minimal-representation geometry of the
 * semigroup.
 */
#pragma once

#include <utility>

#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"

namespace frobenius {

struct LatticeVector {
    Int x1, x2, x3;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

    LatticeVector operator-() const { return {-x1, -x2, -x3}; }
    LatticeVector operator+(const LatticeVector& o) const
    {
        return {x1 + o.x1, x2 + o.x2, x3 + o.x3};
    }
    LatticeVector operator-(const LatticeVector& o) const
    {
        return {x1 - o.x1, x2 - o.x2, x3 - o.x3};
    }
    friend LatticeVector operator*(const Int& k, const LatticeVector& v)
    {
        return {k * v.x1, k * v.x2, k * v.x3};
    }
};

LatticeVector cross(const LatticeVector& a, const LatticeVector& b);

struct LatticeBasis {
    LatticeVector u, v;

    friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

/// a1*x1 + a2*x2 + a3*x3. Requires three generators.
Int height(const Generators& a, const LatticeVector& x);

/// The quadratic form <x, y> = (a1 x1 - a2 x2)(a1 y1 - a2 y2)
///                             + 3 a3^2 x3 y3.
/// Positive definite on the height-zero plane; the three coordinate-plane
/// traces become unit-length directions meeting at 60 degrees.
class GramForm {
public:
    explicit GramForm(const Generators& a);

    Int inner(const LatticeVector& x, const LatticeVector& y) const;
    Int norm(const LatticeVector& x) const { return inner(x, x); }

private:
    Int a1_, a2_, a3_;
};

/// Gram matrix of a basis: g11 = <u,u>, g12 = <u,v>, g22 = <v,v>.
struct GramMatrix {
    Int g11, g12, g22;

    Int det() const { return g11 * g22 - g12 * g12; }

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

GramMatrix gram_matrix(const GramForm& q, const LatticeBasis& b);

/// Basis of the height-zero lattice derived from a Bezout pair for
/// (a1, a2):
///     e1 = (a2, -a1, 0),   e2 = (a3*m1, a3*m2, -1).
/// Requires gcd(a1, a2) == 1. Validates cross(e1, e2) == a, which pins
/// both the span and the orientation.
LatticeBasis initial_basis(const Generators& a);

struct ReductionResult {
    LatticeBasis basis; ///< basis.u shortest, basis.v second
    GramMatrix gram;    ///< Gram matrix of (u, v)
    int loop_count;     ///< iterations of the reduction loop
};

/// Lagrange (two-dimensional) reduction. Each loop subtracts from the
/// longer vector the nearest-integer multiple (halves rounded toward
/// +infinity) of the shorter one and swaps; the Gram matrix is carried
/// along incrementally, so no inner product is recomputed from scratch.
/// Terminates because the norm strictly decreases until the exit test.
/// The determinant of the Gram matrix is loop-invariant.
ReductionResult lagrange_reduce(LatticeBasis basis, const GramForm& q);

/// Reduction test on the Gram matrix: 0 < g11 <= g22 and 2|g12| <= g11.
/// For rank-2 lattices this certifies that u is a shortest nonzero vector
/// and v a shortest one outside the line of u.
bool verify_reduced(const LatticeBasis& basis, const GramForm& q);

} // namespace frobenius
