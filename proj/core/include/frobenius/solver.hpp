/**
 * @file solver.hpp
 * @brief Dispatch and closed forms: the largest gap g and the gap count N
 *        for two or three positive generators.
 *
 * Routes:
 *   trivial                a generator equals 1: no gaps at all
 *   sylvester              coprime pair (directly, or a triple with a
 *                          superfluous generator dropped)
 *   lattice3               pairwise-coprime triple through basis reduction
 *   reduced-common-factor  a pair shares a factor d > 1: fold d out,
 *                          solve the smaller instance, map the answer back
 *   oracle-fallback        brute-force enumeration (forced, or safety net)
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "frobenius/diagnostics.hpp"
#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"
#include "frobenius/oracle.hpp"
#include "frobenius/solution_basis.hpp"

namespace frobenius {

enum class Method {
    trivial,
    sylvester,
    lattice3,
    reduced_common_factor,
    oracle_fallback,
};

std::string_view to_string(Method m);

struct Solution {
    Generators a;    ///< the generators as given
    Method method;
    Int g;           ///< largest gap; -1 when the gap set is empty
    Int N;           ///< number of gaps
    std::optional<FrobeniusData> data;      ///< lattice path only
    std::optional<SolutionBasis> basis;     ///< lattice path only
    std::optional<DiagnosticsBundle> diagnostics; ///< on request, lattice path
};

struct SolveOptions {
    bool with_diagnostics = false; ///< attach the identity battery's bundle
    bool force_oracle = false;     ///< bypass the pipeline entirely
    std::uint64_t oracle_limit = kDefaultTableLimit;
};

/// g and N for a coprime pair, both > 1:
/// g = a1 a2 - a1 - a2 and N = (a1 - 1)(a2 - 1) / 2.
std::pair<Int, Int> sylvester_pair(const Int& a1, const Int& a2);

/// Index of a generator representable by the other two (its minimal
/// multiplier is 1, so dropping it changes nothing), or nullopt.
/// Requires a pairwise-coprime triple.
std::optional<std::size_t> detect_superfluous(const Generators& a);

/// Closed forms on the minimal-multiple data:
/// g = l1 l2 l3 + max(x12 x23 x31, x21 x32 x13) - (a1 + a2 + a3),
/// N = ((l1-1) a1 + (l2-1) a2 + (l3-1) a3 - l1 l2 l3 + 1) / 2.
/// The division is checked exact.
std::pair<Int, Int> frobenius3(const Generators& a, const FrobeniusData& d);

/// Full dispatch. Throws InfiniteGapSet when the generators share a
/// common factor. If the lattice path fails a structural check, falls
/// back to the oracle when the instance fits the safety limit; otherwise
/// the original error surfaces.
Solution solve(const Generators& a, const SolveOptions& opts = {});

} // namespace frobenius
