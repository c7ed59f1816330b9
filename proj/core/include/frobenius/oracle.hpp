/**
 * @file oracle.hpp
 * @brief Brute-force ground truth: dynamic-programming enumeration of the
 *        representable set, complete gap lists, and exhaustive search for
 *        the minimal-multiple data.
 *
 * Nothing here shares code with the lattice pipeline — that is the point.
 * Membership is table-driven, termination is certified by an explicit run
 * of min(a) consecutive representable values, and sizes are guarded by a
 * caller-visible safety limit.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"
#include "frobenius/solution_basis.hpp"

namespace frobenius {

inline constexpr std::uint64_t kDefaultTableLimit = 100'000'000;

/// Complete, sorted list of non-representable positive integers.
struct GapSet {
    std::vector<std::uint64_t> gaps; ///< ascending, complete
    Int frontier; ///< every z in (max gap, frontier] was verified representable

    /// Largest gap, or -1 when there is none.
    Int g() const { return gaps.empty() ? Int(-1) : Int(gaps.back()); }
    Int count() const { return Int(gaps.size()); }
};

/// table[z] == true iff z is representable, for z in [0, bound].
/// Forward dynamic programming over the generators; works for any
/// gcd. Throws LimitExceeded when bound + 1 > limit.
std::vector<bool> membership_table(const Generators& a, std::uint64_t bound,
                                   std::uint64_t limit = kDefaultTableLimit);

/// Enumerates every gap. The table grows until min(a) consecutive
/// representable values certify that no further gap exists; with
/// coprime generators that happens just past the largest gap, far below
/// the worst-case product bound. Throws InfiniteGapSet when the overall
/// gcd exceeds 1 and LimitExceeded when the table would outgrow limit.
GapSet brute_gaps(const Generators& a, std::uint64_t limit = kDefaultTableLimit);

/// Minimal-multiple data found exhaustively: the least l_i with
/// l_i a_i representable over the other two generators, plus the
/// representation. `unique` reports whether all three representations
/// were unique; when some l_i == 1 they need not be, and the
/// lexicographically smallest is returned.
struct BruteData {
    FrobeniusData data;
    bool unique;
};

/// Requires a pairwise-coprime triple. Throws LimitExceeded when the
/// pair tables would outgrow limit.
BruteData brute_lx(const Generators& a, std::uint64_t limit = kDefaultTableLimit);

} // namespace frobenius
