/**
 * @file generators.hpp
 * @brief Validated tuple of two or three positive generators.
 *
 * Input order is preserved throughout the pipeline: l_i and x_ij in the
 * results always refer to positions in the tuple as given. g and N are
 * invariant under permutation, the per-generator data permutes along.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "frobenius/integer.hpp"

namespace frobenius {

class Generators {
public:
    /// Accepts two or three values, each >= 1. Duplicates are allowed
    /// here; the solver deduplicates before dispatch.
    explicit Generators(std::vector<Int> values);
    Generators(std::initializer_list<Int> values);

    std::size_t size() const { return values_.size(); }
    const Int& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Int>& values() const { return values_; }

    friend bool operator==(const Generators&, const Generators&) = default;

private:
    std::vector<Int> values_;
};

} // namespace frobenius
