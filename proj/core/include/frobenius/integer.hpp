/**
 * @file integer.hpp
 * @brief Unbounded signed integer type and exact division helpers.
 *
 * All quantities in the library are exact: Gram entries of the initial
 * lattice basis grow like (max a_i)^6, which overflows any fixed width
 * long before the inputs become interesting.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace frobenius {

using Int = boost::multiprecision::cpp_int;

/// Quotient of num/den rounded toward -infinity. Requires den != 0.
Int floor_div(const Int& num, const Int& den);

/// Quotient of num/den rounded toward +infinity. Requires den != 0.
Int ceil_div(const Int& num, const Int& den);

/// Nearest integer to num/den, halves rounded toward +infinity.
/// Requires den > 0. Branch-free in exact arithmetic:
/// floor((2 num + den) / (2 den)).
Int round_half_up_div(const Int& num, const Int& den);

/// Strict decimal parse: optional sign followed by digits, nothing else.
/// Leading zeros are accepted and ignored. Returns nullopt on malformed
/// input; never throws.
std::optional<Int> parse_int(std::string_view text);

/// Number of bits in |v|; 0 for v == 0.
unsigned bit_length(const Int& v);

} // namespace frobenius
