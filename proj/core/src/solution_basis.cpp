#include "frobenius/solution_basis.hpp"

#include "frobenius/errors.hpp"

#include <array>
#include <optional>

namespace frobenius {

namespace {

bool one_positive_two_negative(const LatticeVector& v)
{
    const int pos = (v.x1 > 0) + (v.x2 > 0) + (v.x3 > 0);
    const int neg = (v.x1 < 0) + (v.x2 < 0) + (v.x3 < 0);
    return pos == 1 && neg == 2;
}

const Int& coord(const LatticeVector& v, std::size_t i)
{
    return i == 0 ? v.x1 : i == 1 ? v.x2 : v.x3;
}

} // namespace

LatticeVector normalize_sign(const LatticeVector& w)
{
    if (one_positive_two_negative(w))
        return w;
    const LatticeVector m = -w;
    if (one_positive_two_negative(m))
        return m;
    throw DegenerateVector("no orientation of the vector has one positive "
                           "and two negative coordinates");
}

std::size_t positive_index(const LatticeVector& w)
{
    if (w.x1 > 0)
        return 0;
    if (w.x2 > 0)
        return 1;
    if (w.x3 > 0)
        return 2;
    throw DegenerateVector("vector has no positive coordinate");
}

SolutionBasis solution_basis(const LatticeVector& u0, const LatticeVector& v)
{
    const LatticeVector u = normalize_sign(u0);
    const std::size_t i = positive_index(u);
    const Int& ui = coord(u, i);
    const Int& vi = coord(v, i);

    // lambda = v_i / u_i splits v between the two neighbouring multiples
    // of u; an integral lambda would zero out a coordinate.
    const Int lam_floor = floor_div(vi, ui);
    if (lam_floor * ui == vi)
        throw DegenerateVector("v_i / u_i is an integer; a shifted vector "
                               "would have a zero coordinate");
    const Int lam_ceil = lam_floor + 1;

    const LatticeVector below = normalize_sign(v - lam_ceil * u);
    const LatticeVector above = normalize_sign(v - lam_floor * u);

    std::array<std::optional<LatticeVector>, 3> slot;
    for (const LatticeVector& f : {u, below, above}) {
        const std::size_t j = positive_index(f);
        if (slot[j])
            throw InvalidSolutionBasis(
                "two basic vectors share positive coordinate "
                + std::to_string(j + 1));
        slot[j] = f;
    }
    return {*slot[0], *slot[1], *slot[2]};
}

FrobeniusData extract_data(const Generators& a, const SolutionBasis& sb)
{
    if (a.size() != 3)
        throw DomainError("minimal-multiple data requires three generators");

    const LatticeVector sum = sb.f1 + sb.f2 + sb.f3;
    if (sum != LatticeVector{Int(0), Int(0), Int(0)})
        throw InternalInconsistency("basic vectors do not sum to zero");
    for (const LatticeVector* f : {&sb.f1, &sb.f2, &sb.f3})
        if (height(a, *f) != 0)
            throw InternalInconsistency("basic vector has nonzero height");

    FrobeniusData d{sb.f1.x1, sb.f2.x2, sb.f3.x3,
                    -sb.f1.x2, -sb.f1.x3,
                    -sb.f2.x1, -sb.f2.x3,
                    -sb.f3.x1, -sb.f3.x2};

    if (d.l1 < 2 || d.l2 < 2 || d.l3 < 2)
        throw InternalInconsistency("every minimal multiplier must be >= 2 "
                                    "on the lattice path");
    for (const Int* x : {&d.x12, &d.x13, &d.x21, &d.x23, &d.x31, &d.x32})
        if (*x < 1)
            throw InternalInconsistency("every off-diagonal coefficient "
                                        "must be >= 1");

    // The three areas spanned by the basic vectors must reproduce the
    // generators; this ties every entry of d to the input in one shot.
    if (a[0] != d.x12 * d.l3 + d.x13 * d.x32
        || a[1] != d.x21 * d.l3 + d.x23 * d.x31
        || a[2] != d.l1 * d.l2 - d.x12 * d.x21)
        throw InternalInconsistency("area identities do not reproduce the "
                                    "generators");
    return d;
}

} // namespace frobenius
