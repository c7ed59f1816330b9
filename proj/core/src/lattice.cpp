#include "frobenius/lattice.hpp"

#include "frobenius/errors.hpp"
#include "frobenius/integer_kernel.hpp"

#include <cassert>
#include <utility>

namespace frobenius {

LatticeVector cross(const LatticeVector& a, const LatticeVector& b)
{
    return {a.x2 * b.x3 - a.x3 * b.x2,
            a.x3 * b.x1 - a.x1 * b.x3,
            a.x1 * b.x2 - a.x2 * b.x1};
}

Int height(const Generators& a, const LatticeVector& x)
{
    if (a.size() != 3)
        throw DomainError("height requires three generators");
    return a[0] * x.x1 + a[1] * x.x2 + a[2] * x.x3;
}

GramForm::GramForm(const Generators& a)
{
    if (a.size() != 3)
        throw DomainError("the lattice metric requires three generators");
    a1_ = a[0];
    a2_ = a[1];
    a3_ = a[2];
}

Int GramForm::inner(const LatticeVector& x, const LatticeVector& y) const
{
    return (a1_ * x.x1 - a2_ * x.x2) * (a1_ * y.x1 - a2_ * y.x2)
           + 3 * a3_ * a3_ * x.x3 * y.x3;
}

GramMatrix gram_matrix(const GramForm& q, const LatticeBasis& b)
{
    return {q.inner(b.u, b.u), q.inner(b.u, b.v), q.inner(b.v, b.v)};
}

LatticeBasis initial_basis(const Generators& a)
{
    if (a.size() != 3)
        throw DomainError("the initial basis requires three generators");
    const BezoutResult bz = extended_gcd(a[0], a[1]);
    if (bz.g != 1)
        throw DomainError("initial basis requires gcd(a1, a2) == 1, got "
                          + bz.g.str());
    const LatticeVector e1{a[1], -a[0], Int(0)};
    const LatticeVector e2{a[2] * bz.m1, a[2] * bz.m2, Int(-1)};
    // cross(e1, e2) == a pins span, index and orientation in one check.
    const LatticeVector c = cross(e1, e2);
    if (c.x1 != a[0] || c.x2 != a[1] || c.x3 != a[2])
        throw InternalInconsistency("initial basis cross-product check failed");
    return {e1, e2};
}

ReductionResult lagrange_reduce(LatticeBasis b, const GramForm& q)
{
    Int g11 = q.inner(b.u, b.u);
    Int g12 = q.inner(b.u, b.v);
    Int g22 = q.inner(b.v, b.v);
    if (g11 == 0 || g22 == 0 || g11 * g22 == g12 * g12)
        throw DomainError("degenerate basis: zero or dependent vectors");

    if (g11 > g22) {
        std::swap(b.u, b.v);
        std::swap(g11, g22);
    }

    int loops = 0;
    while (true) {
        ++loops;
        // Shift v by the nearest multiple of u, then swap the roles.
        const Int x = round_half_up_div(g12, g11);
        const Int y = g12 - x * g11;
        LatticeVector r = b.v - x * b.u;
        b.v = b.u;
        b.u = std::move(r);
        // Incremental Gram update; the cross term read here is the one
        // from before the shift. New <u,u> = old <v,v> - x*(y + old <u,v>).
        const Int cross_term = g12;
        Int new_g11 = g22 - x * (y + cross_term);
        g22 = g11;
        g11 = std::move(new_g11);
        g12 = y;

        assert(g11 == q.inner(b.u, b.u) && "incremental Gram update drifted");
        assert(g12 == q.inner(b.u, b.v) && "incremental Gram update drifted");
        assert(g22 == q.inner(b.v, b.v) && "incremental Gram update drifted");

        if (g11 >= g22)
            break;
    }

    // The loop exits with the new vector no shorter than the previous
    // minimum, so the previous minimum (now in v) is the true shortest.
    LatticeBasis out{b.v, b.u};
    GramMatrix gm{g22, g12, g11};
    return {std::move(out), std::move(gm), loops};
}

bool verify_reduced(const LatticeBasis& basis, const GramForm& q)
{
    const GramMatrix gm = gram_matrix(q, basis);
    if (gm.g11 <= 0 || gm.det() <= 0)
        return false;
    return gm.g11 <= gm.g22
           && 2 * boost::multiprecision::abs(gm.g12) <= gm.g11;
}

} // namespace frobenius
