#include "frobenius/sampling.hpp"

#include "frobenius/errors.hpp"
#include "frobenius/integer_kernel.hpp"

namespace frobenius {

std::array<Int, 3> random_pairwise_coprime_triple(std::mt19937_64& rng,
                                                  std::uint64_t max)
{
    if (max < 7)
        throw DomainError("need max >= 7 to fit a pairwise-coprime triple");
    std::uniform_int_distribution<std::uint64_t> dist(2, max);
    while (true) {
        const Int a1(dist(rng)), a2(dist(rng)), a3(dist(rng));
        if (gcd(a1, a2) == 1 && gcd(a1, a3) == 1 && gcd(a2, a3) == 1)
            return {a1, a2, a3};
    }
}

std::array<Int, 3> random_common_factor_triple(std::mt19937_64& rng,
                                               std::uint64_t max)
{
    if (max < 12)
        throw DomainError("need max >= 12 to fit a common-factor triple");
    std::uniform_int_distribution<std::uint64_t> dist(2, max);
    while (true) {
        const Int a1(dist(rng)), a2(dist(rng)), a3(dist(rng));
        const Int d12 = gcd(a1, a2), d13 = gcd(a1, a3), d23 = gcd(a2, a3);
        const bool some_pair_shares = d12 > 1 || d13 > 1 || d23 > 1;
        if (some_pair_shares && gcd(d12, a3) == 1)
            return {a1, a2, a3};
    }
}

} // namespace frobenius
