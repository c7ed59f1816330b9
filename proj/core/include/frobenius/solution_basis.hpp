/**
 * @file solution_basis.hpp
 * @brief From a reduced lattice basis to the three basic vectors and the
 *        minimal-representation data (l_i, x_ij).
 *
 * A basic vector f_i has one positive coordinate l_i at position i and
 * negative entries -x_ij elsewhere; height zero makes it encode the
 * minimal relation  l_i a_i = x_ij a_j + x_ik a_k.  The three of them
 * sum to zero and carry the complete answer for the triple.
 */
#pragma once

#include <cstddef>

#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"
#include "frobenius/lattice.hpp"

namespace frobenius {

/// Orient w so that exactly one coordinate is positive and two are
/// negative, flipping the overall sign if needed. Throws DegenerateVector
/// when neither orientation qualifies (some coordinate vanishes, or the
/// signs split 3-0).
LatticeVector normalize_sign(const LatticeVector& w);

/// 0-based index of the unique positive coordinate of a sign-normalized
/// vector.
std::size_t positive_index(const LatticeVector& w);

struct SolutionBasis {
    LatticeVector f1, f2, f3; ///< f_i positive exactly at coordinate i

    friend bool operator==(const SolutionBasis&, const SolutionBasis&) = default;
};

/// Builds the solution basis from a reduced basis (u, v): with i the
/// positive coordinate of the normalized u and lambda = v_i / u_i, the
/// three basic vectors are u, v - ceil(lambda) u and v - floor(lambda) u,
/// each sign-normalized, relabeled by the position of their positive
/// coordinate. Throws DegenerateVector when lambda is an integer and
/// InvalidSolutionBasis when the positive coordinates are not distinct.
SolutionBasis solution_basis(const LatticeVector& u, const LatticeVector& v);

/// Minimal-multiple data read off a solution basis:
/// l_i a_i = x_ij a_j + x_ik a_k with all l_i >= 2 and x_ij >= 1.
struct FrobeniusData {
    Int l1, l2, l3;
    Int x12, x13;
    Int x21, x23;
    Int x31, x32;

    friend bool operator==(const FrobeniusData&, const FrobeniusData&) = default;
};

/// Reads l_i (the diagonal) and x_ij (negated off-diagonal entries) from
/// the basic vectors and validates the full coupling: every f_i has
/// height zero, f1 + f2 + f3 == 0, l_i >= 2, x_ij >= 1, and the area
/// identities a1 = x12 l3 + x13 x32 (and cyclic versions) reproduce the
/// generators exactly. Throws InternalInconsistency on any violation.
FrobeniusData extract_data(const Generators& a, const SolutionBasis& sb);

} // namespace frobenius
