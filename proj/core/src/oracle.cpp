#include "frobenius/oracle.hpp"

#include "frobenius/errors.hpp"
#include "frobenius/integer_kernel.hpp"

#include <algorithm>
#include <cstdint>

namespace frobenius {

namespace {

// Generators that fit below the table limit, as machine words; larger
// ones can never index a table within the limit and are dropped.
std::vector<std::uint64_t> active_generators(const Generators& a,
                                             std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for (const Int& v : a.values())
        if (v <= Int(limit))
            out.push_back(v.convert_to<std::uint64_t>());
    return out;
}

} // namespace

std::vector<bool> membership_table(const Generators& a, std::uint64_t bound,
                                   std::uint64_t limit)
{
    if (bound + 1 > limit)
        throw LimitExceeded("membership table of " + std::to_string(bound + 1)
                            + " entries exceeds the limit of "
                            + std::to_string(limit));
    const std::vector<std::uint64_t> gens = active_generators(a, bound == 0 ? 1 : bound);
    std::vector<bool> table(bound + 1, false);
    table[0] = true;
    for (std::uint64_t z = 1; z <= bound; ++z)
        for (std::uint64_t g : gens)
            if (g <= z && table[z - g]) {
                table[z] = true;
                break;
            }
    return table;
}

GapSet brute_gaps(const Generators& a, std::uint64_t limit)
{
    Int all = a[0];
    for (std::size_t i = 1; i < a.size(); ++i)
        all = gcd(all, a[i]);
    if (all != 1)
        throw InfiniteGapSet("infinite gap set (gcd=" + all.str() + ")");

    const Int min_gen = *std::min_element(a.values().begin(), a.values().end());
    if (min_gen > Int(limit))
        throw LimitExceeded("the gap list alone would exceed the limit of "
                            + std::to_string(limit) + " entries");
    const std::uint64_t run_target = min_gen.convert_to<std::uint64_t>();

    // Hard stop just past the product bound; with gcd 1 the run
    // certificate always fires long before it.
    Int product = 1;
    for (const Int& v : a.values())
        product *= v;
    const Int hard_stop = product + min_gen + 2;
    const std::uint64_t inconsistency_stop =
        hard_stop <= Int(limit) ? hard_stop.convert_to<std::uint64_t>()
                                : limit + 1;

    const std::vector<std::uint64_t> gens = active_generators(a, limit);

    GapSet out;
    std::vector<bool> table;
    table.reserve(1024);
    table.push_back(true);
    std::uint64_t run = 0;
    for (std::uint64_t z = 1;; ++z) {
        if (z > inconsistency_stop)
            throw InternalInconsistency("run certificate did not fire below "
                                        "the product bound");
        if (z >= limit)
            throw LimitExceeded("membership table exceeds the limit of "
                                + std::to_string(limit) + " entries");
        bool rep = false;
        for (std::uint64_t g : gens)
            if (g <= z && table[z - g]) {
                rep = true;
                break;
            }
        table.push_back(rep);
        if (rep) {
            if (++run >= run_target) {
                // min(a) consecutive representable values: every larger z
                // is one of these plus a multiple of min(a).
                out.frontier = Int(z);
                break;
            }
        } else {
            run = 0;
            out.gaps.push_back(z);
        }
    }
    return out;
}

BruteData brute_lx(const Generators& a, std::uint64_t limit)
{
    if (a.size() != 3)
        throw DomainError("exhaustive minimal-multiple search requires a "
                          "triple");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (gcd(a[i], a[j]) != 1)
                throw DomainError("exhaustive minimal-multiple search "
                                  "requires a pairwise-coprime triple");

    // For each i the scan stays below a_j * a_k + a_i: beyond the largest
    // pair gap everything is representable.
    struct Axis {
        std::size_t i, j, k;
    };
    const Axis axes[3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};

    Int l[3], xj[3], xk[3];
    bool unique = true;
    for (const Axis& ax : axes) {
        const Int bound_int = a[ax.j] * a[ax.k] + a[ax.i];
        if (bound_int + 1 > Int(limit))
            throw LimitExceeded("pair table of " + bound_int.str()
                                + " entries exceeds the limit");
        const std::uint64_t bound = bound_int.convert_to<std::uint64_t>();
        const std::uint64_t ai = a[ax.i].convert_to<std::uint64_t>();
        const std::uint64_t aj = a[ax.j].convert_to<std::uint64_t>();
        const std::uint64_t ak = a[ax.k].convert_to<std::uint64_t>();
        const std::vector<bool> table =
            membership_table(Generators{a[ax.j], a[ax.k]}, bound, limit);

        std::uint64_t li = 0;
        for (std::uint64_t cand = 1;; ++cand) {
            if (cand * ai > bound)
                throw InternalInconsistency("no representable multiple below "
                                            "the pair product bound");
            if (table[cand * ai]) {
                li = cand;
                break;
            }
        }

        // All representations of li * ai over (aj, ak), ascending in the
        // aj-coefficient; the first is the lexicographic minimum.
        const std::uint64_t z = li * ai;
        std::uint64_t found = 0, first_xj = 0, first_xk = 0;
        for (std::uint64_t cj = 0; cj * aj <= z; ++cj) {
            const std::uint64_t rem = z - cj * aj;
            if (rem % ak == 0) {
                if (found == 0) {
                    first_xj = cj;
                    first_xk = rem / ak;
                }
                ++found;
            }
        }
        if (found == 0)
            throw InternalInconsistency("representable multiple has no "
                                        "two-generator representation");
        if (found > 1)
            unique = false;
        l[ax.i] = Int(li);
        xj[ax.i] = Int(first_xj);
        xk[ax.i] = Int(first_xk);
    }

    if (!unique && l[0] >= 2 && l[1] >= 2 && l[2] >= 2)
        throw InternalInconsistency("minimal representation is not unique "
                                    "although every multiplier is >= 2");

    BruteData out;
    out.unique = unique;
    out.data = FrobeniusData{l[0], l[1], l[2],
                             xj[0], xk[0],   // x12, x13
                             xj[1], xk[1],   // x21, x23
                             xj[2], xk[2]};  // x31, x32
    return out;
}

} // namespace frobenius
