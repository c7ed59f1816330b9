/**
 * @file integer_kernel.hpp
 * @brief gcd, Bezout coefficients, modular inverse, and the logarithmic
 *        membership test for two-generator numerical semigroups.
 */
#pragma once

#include "frobenius/integer.hpp"

namespace frobenius {

/// gcd, canonically nonnegative; gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);

struct BezoutResult {
    Int g;  ///< gcd(a, b), nonnegative
    Int m1; ///< coefficient of a
    Int m2; ///< coefficient of b; m1*a + m2*b == g

    friend bool operator==(const BezoutResult&, const BezoutResult&) = default;
};

/// Extended Euclid returning the canonical minimal coefficient pair:
/// m1 is the least-absolute-value representative of its residue class
/// modulo b/g, ties broken toward the positive one. This pins one of
/// the two natural outputs deterministically and keeps |m1| <= b/(2g)
/// and |m2| <= a/(2g) whenever neither input divides the other.
/// Requires not both inputs zero.
BezoutResult extended_gcd(const Int& a, const Int& b);

/// The y in [0, m) with x*y == 1 (mod m). Requires m >= 1 and
/// gcd(x, m) == 1; mod_inverse(x, 1) == 0 for every x.
Int mod_inverse(const Int& x, const Int& m);

/// Whether z is a nonnegative combination of the coprime pair (a1, a2),
/// decided in O(log) arithmetic steps: with y0 = z * a2^{-1} mod a1 the
/// minimal a2-coefficient of any representation, z is representable iff
/// y0 * a2 <= z. Requires a1, a2 >= 1 coprime and z >= 0.
bool is_representable_pair(const Int& a1, const Int& a2, const Int& z);

} // namespace frobenius
