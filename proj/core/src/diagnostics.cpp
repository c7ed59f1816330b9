#include "frobenius/diagnostics.hpp"

#include "frobenius/errors.hpp"

#include <algorithm>

namespace frobenius {

namespace {

void require_triple(const Generators& a)
{
    if (a.size() != 3)
        throw DomainError("diagnostics require three generators");
}

// The two closed forms the battery checks against. Deliberately local
// copies: the whole point of the battery is evaluating each identity by
// an independent route.
Int closed_form_g(const Generators& a, const FrobeniusData& d)
{
    const Int lll = d.l1 * d.l2 * d.l3;
    const Int p = d.x12 * d.x23 * d.x31;
    const Int q = d.x21 * d.x32 * d.x13;
    return lll + std::max(p, q) - (a[0] + a[1] + a[2]);
}

Int closed_form_count(const Generators& a, const FrobeniusData& d)
{
    const Int num = (d.l1 - 1) * a[0] + (d.l2 - 1) * a[1] + (d.l3 - 1) * a[2]
                    - d.l1 * d.l2 * d.l3 + 1;
    if (num < 0 || num % 2 != 0)
        throw InternalInconsistency("gap-count numerator must be even and "
                                    "nonnegative, got " + num.str());
    return num / 2;
}

} // namespace

std::pair<Int, Int> corner_heights(const Generators& a, const FrobeniusData& d)
{
    require_triple(a);
    const Int base = d.l3 * a[2];
    Int fq1 = base + d.x21 * a[0];
    Int fq2 = base + d.x12 * a[1];
    const Int g_corner = std::max(fq1, fq2) - (a[0] + a[1] + a[2]);
    if (g_corner != closed_form_g(a, d))
        throw InternalInconsistency("corner-height route to g disagrees "
                                    "with the symmetric closed form");
    return {std::move(fq1), std::move(fq2)};
}

std::array<Int, 3> area_identities(const Generators& a, const FrobeniusData& d)
{
    require_triple(a);
    std::array<Int, 3> r{d.x12 * d.l3 + d.x13 * d.x32,
                         d.x21 * d.l3 + d.x23 * d.x31,
                         d.l1 * d.l2 - d.x12 * d.x21};
    for (int i = 0; i < 3; ++i)
        if (r[static_cast<std::size_t>(i)] != a[static_cast<std::size_t>(i)])
            throw InternalInconsistency(
                "area identity " + std::to_string(i + 1)
                + " does not reproduce the generator");
    return r;
}

Int volume_times2(const Generators& a, const FrobeniusData& d)
{
    require_triple(a);
    Int v2 = d.l1 * a[0] + d.l2 * a[1] + d.l3 * a[2] - d.l1 * d.l2 * d.l3;
    if (v2 < 0)
        throw InternalInconsistency("pocket volume is negative");
    return v2;
}

std::tuple<Int, Int, Int> boundary_counts(const Generators& a,
                                          const FrobeniusData& d)
{
    require_triple(a);
    const Int sl = d.l1 + d.l2 + d.l3;
    Int z1 = a[0] + a[1] + a[2] - 2 * sl + 3;
    Int z2 = sl - 3;
    Int z3 = sl - 6;
    if (z1 < 0 || z2 < 0 || z3 < 0)
        throw InternalInconsistency("boundary point count is negative");
    return {std::move(z1), std::move(z2), std::move(z3)};
}

Int interior_count(const Generators& a, const FrobeniusData& d)
{
    const Int v2 = volume_times2(a, d);
    const auto [z1, z2, z3] = boundary_counts(a, d);
    const Int four_z0 = 2 * v2 - 2 * z1 - 3 * z2 - z3 - 7;
    if (four_z0 < 0 || four_z0 % 4 != 0)
        throw InternalInconsistency("interior count is not a nonnegative "
                                    "integer");
    Int z0 = four_z0 / 4;
    if (z0 != closed_form_count(a, d))
        throw InternalInconsistency("interior point count disagrees with "
                                    "the closed-form gap count");
    return z0;
}

std::vector<std::array<Int, 2>> lshape_polygon(const Generators& a,
                                               const FrobeniusData& d,
                                               int index)
{
    require_triple(a);
    if (index < 1 || index > 3)
        throw DomainError("L-shape index must be 1, 2 or 3");

    // In the plane x_i = 0 with axes (x_j, x_k), (i, j, k) cyclic, the
    // cross-section is the union of the rectangles l_j x x_ik and
    // x_ij x l_k sharing the corner at the origin.
    Int lj, lk, xij, xik;
    switch (index) {
    case 1: lj = d.l2; lk = d.l3; xij = d.x12; xik = d.x13; break;
    case 2: lj = d.l3; lk = d.l1; xij = d.x23; xik = d.x21; break;
    default: lj = d.l1; lk = d.l2; xij = d.x31; xik = d.x32; break;
    }

    const Int zero(0);
    std::vector<std::array<Int, 2>> poly{
        {zero, zero}, {lj, zero}, {lj, xik}, {xij, xik}, {xij, lk}, {zero, lk}};

    // Shoelace; counter-clockwise order makes it positive.
    Int twice_area = 0;
    for (std::size_t t = 0; t < poly.size(); ++t) {
        const auto& p = poly[t];
        const auto& n = poly[(t + 1) % poly.size()];
        twice_area += p[0] * n[1] - n[0] * p[1];
    }
    if (twice_area != 2 * a[static_cast<std::size_t>(index - 1)])
        throw InternalInconsistency("L-shape area does not equal the "
                                    "generator");
    return poly;
}

DiagnosticsBundle diagnostics_bundle(const Generators& a,
                                     const FrobeniusData& d)
{
    DiagnosticsBundle b;
    std::tie(b.fq1, b.fq2) = corner_heights(a, d);
    b.areas = area_identities(a, d);
    b.vol_times2 = volume_times2(a, d);
    std::tie(b.z1, b.z2, b.z3) = boundary_counts(a, d);
    b.z0 = interior_count(a, d);
    for (int i = 1; i <= 3; ++i)
        lshape_polygon(a, d, i); // shoelace checks run as a side effect
    return b;
}

} // namespace frobenius
