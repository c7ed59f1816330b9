/**
 * @file diagnostics.hpp
 * @brief Geometric identity battery: independent routes to g, N and the
 *        generators themselves from the minimal-multiple data.
 *
 * Every operation here recomputes a quantity the solver already knows by
 * a different route and throws InternalInconsistency on disagreement.
 * The battery is cheap (a handful of multiplications), so tests run it
 * on every solved instance; production callers opt in.
 */
#pragma once

#include <array>
#include <tuple>
#include <utility>
#include <vector>

#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"
#include "frobenius/solution_basis.hpp"

namespace frobenius {

/// Heights of the two extreme corners of the gap region:
/// fq1 = l3 a3 + x21 a1 and fq2 = l3 a3 + x12 a2. Checks that
/// max(fq1, fq2) - (a1 + a2 + a3) equals the symmetric closed form for g.
std::pair<Int, Int> corner_heights(const Generators& a, const FrobeniusData& d);

/// Recomputes (a1, a2, a3) as the lattice areas swept by the basic
/// vectors; throws if any disagrees with the input.
std::array<Int, 3> area_identities(const Generators& a, const FrobeniusData& d);

/// Twice the volume of the fundamental pocket:
/// 2 vol = l1 a1 + l2 a2 + l3 a3 - l1 l2 l3. Checked nonnegative.
Int volume_times2(const Generators& a, const FrobeniusData& d);

/// Lattice point counts on the pocket boundary, split by location:
/// z1 = a1 + a2 + a3 - 2(l1 + l2 + l3) + 3   face interiors,
/// z2 = l1 + l2 + l3 - 3                     reentrant edges,
/// z3 = l1 + l2 + l3 - 6                     protruding edges.
/// Each must be nonnegative.
std::tuple<Int, Int, Int> boundary_counts(const Generators& a,
                                          const FrobeniusData& d);

/// Interior lattice point count z0 of the pocket, via the quarter-weight
/// boundary identity 4 z0 = 4 vol - 2 z1 - 3 z2 - z3 - 7. Demands
/// exact divisibility, nonnegativity, and agreement with the closed-form
/// gap count N.
Int interior_count(const Generators& a, const FrobeniusData& d);

/// The six vertices, counter-clockwise, of the L-shaped cross-section of
/// the gap staircase in the coordinate plane x_i = 0, for index 1, 2 or
/// 3. Coordinates are (x_j, x_k) with (i, j, k) a cyclic shift of
/// (1, 2, 3). The enclosed area is shoelace-checked against a_i.
std::vector<std::array<Int, 2>> lshape_polygon(const Generators& a,
                                               const FrobeniusData& d,
                                               int index);

/// Everything above in one pass.
struct DiagnosticsBundle {
    Int fq1, fq2;              ///< corner heights
    std::array<Int, 3> areas;  ///< recomputed generators
    Int vol_times2;            ///< twice the pocket volume
    Int z1, z2, z3;            ///< boundary point counts
    Int z0;                    ///< interior point count == N

    friend bool operator==(const DiagnosticsBundle&,
                           const DiagnosticsBundle&) = default;
};

DiagnosticsBundle diagnostics_bundle(const Generators& a,
                                     const FrobeniusData& d);

} // namespace frobenius
