#include "frobenius/solver.hpp"

#include "frobenius/errors.hpp"
#include "frobenius/integer_kernel.hpp"
#include "frobenius/lattice.hpp"

#include <algorithm>
#include <exception>
#include <vector>

namespace frobenius {

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::trivial: return "trivial";
    case Method::sylvester: return "sylvester";
    case Method::lattice3: return "lattice3";
    case Method::reduced_common_factor: return "reduced-common-factor";
    case Method::oracle_fallback: return "oracle-fallback";
    }
    return "?";
}

std::pair<Int, Int> sylvester_pair(const Int& a1, const Int& a2)
{
    if (a1 <= 1 || a2 <= 1)
        throw DomainError("pair closed form requires both generators > 1");
    if (gcd(a1, a2) != 1)
        throw DomainError("pair closed form requires coprime generators");
    Int g = a1 * a2 - a1 - a2;
    // (a1-1)(a2-1) is even: coprime generators are never both even.
    Int n = (a1 - 1) * (a2 - 1) / 2;
    return {std::move(g), std::move(n)};
}

std::optional<std::size_t> detect_superfluous(const Generators& a)
{
    if (a.size() != 3)
        throw DomainError("superfluous-generator detection requires a triple");
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        if (is_representable_pair(a[j], a[k], a[i]))
            return i;
    }
    return std::nullopt;
}

std::pair<Int, Int> frobenius3(const Generators& a, const FrobeniusData& d)
{
    if (a.size() != 3)
        throw DomainError("triple closed form requires three generators");
    const Int lll = d.l1 * d.l2 * d.l3;
    const Int p = d.x12 * d.x23 * d.x31;
    const Int q = d.x21 * d.x32 * d.x13;
    Int g = lll + std::max(p, q) - (a[0] + a[1] + a[2]);
    const Int num = (d.l1 - 1) * a[0] + (d.l2 - 1) * a[1] + (d.l3 - 1) * a[2]
                    - lll + 1;
    if (num < 0 || num % 2 != 0)
        throw InternalInconsistency("gap-count numerator must be even and "
                                    "nonnegative, got " + num.str());
    return {std::move(g), Int(num / 2)};
}

namespace {

Solution oracle_solve(const Generators& a, const SolveOptions& opts)
{
    const GapSet gs = brute_gaps(a, opts.oracle_limit);
    Solution sol{a, Method::oracle_fallback, gs.g(), gs.count(), {}, {}, {}};
    return sol;
}

Solution lattice_solve(const Generators& original, const Generators& t,
                       const SolveOptions& opts)
{
    const GramForm q(t);
    const ReductionResult red = lagrange_reduce(initial_basis(t), q);
    const SolutionBasis sb = solution_basis(red.basis.u, red.basis.v);
    const FrobeniusData data = extract_data(t, sb);
    auto [g, n] = frobenius3(t, data);
    Solution sol{original, Method::lattice3, std::move(g), std::move(n),
                 data, sb, {}};
    if (opts.with_diagnostics)
        sol.diagnostics = diagnostics_bundle(t, data);
    return sol;
}

} // namespace

Solution solve(const Generators& a, const SolveOptions& opts)
{
    if (opts.force_oracle)
        return oracle_solve(a, opts);

    // Duplicates contribute nothing to the generated set.
    std::vector<Int> vals;
    for (const Int& v : a.values())
        if (std::find(vals.begin(), vals.end(), v) == vals.end())
            vals.push_back(v);

    for (const Int& v : vals)
        if (v == 1)
            return {a, Method::trivial, Int(-1), Int(0), {}, {}, {}};

    Int all = vals[0];
    for (std::size_t i = 1; i < vals.size(); ++i)
        all = gcd(all, vals[i]);
    if (all != 1)
        throw InfiniteGapSet("infinite gap set (gcd=" + all.str() + ")");

    if (vals.size() == 2) {
        auto [g, n] = sylvester_pair(vals[0], vals[1]);
        return {a, Method::sylvester, std::move(g), std::move(n), {}, {}, {}};
    }

    const bool pairwise_coprime = gcd(vals[0], vals[1]) == 1
                                  && gcd(vals[0], vals[2]) == 1
                                  && gcd(vals[1], vals[2]) == 1;
    if (pairwise_coprime) {
        const Generators t{vals[0], vals[1], vals[2]};
        if (const auto idx = detect_superfluous(t)) {
            // A generator reachable from the other two changes nothing;
            // the remaining pair is coprime with both entries > 1.
            std::vector<Int> rest;
            for (std::size_t j = 0; j < 3; ++j)
                if (j != *idx)
                    rest.push_back(vals[j]);
            auto [g, n] = sylvester_pair(rest[0], rest[1]);
            return {a, Method::sylvester, std::move(g), std::move(n),
                    {}, {}, {}};
        }
        std::exception_ptr pipeline_error;
        try {
            return lattice_solve(a, t, opts);
        } catch (const DegenerateVector&) {
            pipeline_error = std::current_exception();
        } catch (const InvalidSolutionBasis&) {
            pipeline_error = std::current_exception();
        } catch (const InternalInconsistency&) {
            pipeline_error = std::current_exception();
        }
        // Structural failure: never guess. Fall back to enumeration when
        // it fits the safety limit, otherwise surface the original error.
        try {
            return oracle_solve(a, opts);
        } catch (const LimitExceeded&) {
            std::rethrow_exception(pipeline_error);
        }
    }

    // Some pair shares a factor d > 1 (but not all three). Folding d out
    // of that pair maps gaps one-to-one:
    //   g(d b1, d b2, c) = d g(b1, b2, c) + (d - 1) c
    //   N(d b1, d b2, c) = d N(b1, b2, c) + (d - 1)(c - 1) / 2
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& p : pairs) {
        const Int d = gcd(vals[p[0]], vals[p[1]]);
        if (d == 1)
            continue;
        const std::size_t other = 3 - p[0] - p[1];
        const Generators sub{vals[p[0]] / d, vals[p[1]] / d, vals[other]};
        SolveOptions sub_opts = opts;
        sub_opts.with_diagnostics = false;
        const Solution inner = solve(sub, sub_opts);
        Int g = d * inner.g + (d - 1) * vals[other];
        const Int num = (d - 1) * (vals[other] - 1);
        // Exact: gcd(d, c) == 1, so d and c are not both even.
        if (num % 2 != 0)
            throw InternalInconsistency("common-factor gap-count correction "
                                        "is not an integer");
        Int n = d * inner.N + num / 2;
        return {a, Method::reduced_common_factor, std::move(g), std::move(n),
                {}, {}, {}};
    }
    throw InternalInconsistency("dispatch fell through every route");
}

} // namespace frobenius
