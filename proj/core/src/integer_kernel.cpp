#include "frobenius/integer_kernel.hpp"

#include "frobenius/errors.hpp"

#include <utility>

namespace frobenius {

using boost::multiprecision::abs;

Int gcd(const Int& a, const Int& b)
{
    Int x = abs(a), y = abs(b);
    while (y != 0) {
        x %= y;
        std::swap(x, y);
    }
    return x;
}

BezoutResult extended_gcd(const Int& a, const Int& b)
{
    if (a == 0 && b == 0)
        throw DomainError("extended_gcd(0, 0) is undefined");

    // Classic iteration on |a|, |b|; signs are restored at the end.
    Int old_r = abs(a), r = abs(b);
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    Int g = old_r, m1 = old_s, m2 = old_t;
    if (a < 0)
        m1 = -m1;
    if (b < 0)
        m2 = -m2;

    // Canonical choice: the coefficient pairs are (m1 + k*b/g, m2 - k*a/g).
    // Pick the m1 of least absolute value, preferring the positive one on
    // a tie, then recompute m2 exactly.
    if (a != 0 && b != 0) {
        const Int step = abs(b) / g;
        m1 %= step;
        if (2 * abs(m1) > step)
            m1 += (m1 < 0) ? step : -step;
        if (2 * abs(m1) == step && m1 < 0)
            m1 = -m1;
        m2 = (g - m1 * a) / b;
    }
    return {std::move(g), std::move(m1), std::move(m2)};
}

Int mod_inverse(const Int& x, const Int& m)
{
    if (m < 1)
        throw DomainError("modulus must be >= 1, got " + m.str());
    if (m == 1)
        return 0;
    Int xr = x % m;
    if (xr < 0)
        xr += m;
    const BezoutResult bz = extended_gcd(xr, m);
    if (bz.g != 1)
        throw DomainError("no inverse: gcd(" + x.str() + ", " + m.str()
                          + ") = " + bz.g.str());
    Int y = bz.m1 % m;
    if (y < 0)
        y += m;
    return y;
}

bool is_representable_pair(const Int& a1, const Int& a2, const Int& z)
{
    if (a1 < 1 || a2 < 1)
        throw DomainError("generators must be positive");
    if (z < 0)
        throw DomainError("membership is defined for z >= 0");
    if (gcd(a1, a2) != 1)
        throw DomainError("pair membership requires coprime generators");
    // Any representation z = x*a1 + y*a2 forces y == z * a2^{-1} (mod a1);
    // the least such y >= 0 gives the representation of least a2-part,
    // which exists iff it does not overshoot z.
    const Int y0 = (z * mod_inverse(a2, a1)) % a1;
    return y0 * a2 <= z;
}

} // namespace frobenius
