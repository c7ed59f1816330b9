/**
 * @file sampling.hpp
 * @brief Seeded random instances for randomized cross-validation.
 *
 * Deterministic for a fixed seed and binary; meant for test corpora and
 * the verify command, not for cryptographic anything.
 */
#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"

namespace frobenius {

/// Uniform triple with 2 <= a_i <= max, conditioned on pairwise
/// coprimality, by rejection. Requires max >= 7.
std::array<Int, 3> random_pairwise_coprime_triple(std::mt19937_64& rng,
                                                  std::uint64_t max);

/// Triple with overall gcd 1 in which some pair shares a factor > 1,
/// 2 <= a_i <= max. Requires max >= 12.
std::array<Int, 3> random_common_factor_triple(std::mt19937_64& rng,
                                               std::uint64_t max);

} // namespace frobenius
