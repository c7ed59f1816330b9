/**
 * @file frob.cpp
 * @brief Command-line front end: solve, verify (against the brute-force
 *        oracle), and emit-geometry.
 *
 * Exit codes: 0 ok, 1 internal inconsistency, 2 usage, 3 infinite gap
 * set, 4 verify mismatch. JSON records are bit-stable for identical
 * inputs and flags; timings go to stderr (JSON mode) or into a trailing
 * human-readable line, never into a JSON record.
 */
#include "CLI11.hpp"

#include "frobenius/frobenius.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace frobenius;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfinite = 3;
constexpr int kExitMismatch = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const InfiniteGapSet*>(&e))
        return kExitInfinite;
    if (dynamic_cast<const UsageError*>(&e)
        || dynamic_cast<const DomainError*>(&e)
        || dynamic_cast<const LimitExceeded*>(&e))
        return kExitUsage;
    return kExitInternal;
}

// ---------------------------------------------------------------- parsing

Int parse_generator(const std::string& text)
{
    const std::optional<Int> v = parse_int(text);
    if (!v)
        throw UsageError("not a decimal integer: '" + text + "'");
    return *v;
}

Generators parse_generators(const std::vector<std::string>& args)
{
    if (args.size() != 2 && args.size() != 3)
        throw UsageError("expected 2 or 3 generators, got "
                         + std::to_string(args.size()));
    std::vector<Int> vals;
    for (const std::string& s : args)
        vals.push_back(parse_generator(s));
    try {
        return Generators(std::move(vals));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

/// One instance per line; '#' starts a comment; commas count as blanks.
std::vector<Generators> read_batch(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open batch file '" + path + "'");
    std::vector<Generators> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        try {
            out.push_back(parse_generators(tokens));
        } catch (const UsageError& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": "
                             + e.what());
        }
    }
    return out;
}

// ------------------------------------------------------------- formatting

std::string tuple_text(const std::vector<Int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string json_list(const std::vector<Int>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].str();
    }
    return s + "]";
}

std::string json_vector(const LatticeVector& v)
{
    return "[" + v.x1.str() + "," + v.x2.str() + "," + v.x3.str() + "]";
}

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string solution_json(const Solution& s)
{
    std::ostringstream o;
    o << "{\"a\":" << json_list(s.a.values()) << ",\"method\":\""
      << to_string(s.method) << "\",\"g\":" << s.g.str()
      << ",\"N\":" << s.N.str();
    if (s.data) {
        const FrobeniusData& d = *s.data;
        o << ",\"l\":" << json_list({d.l1, d.l2, d.l3}) << ",\"x\":{"
          << "\"x12\":" << d.x12.str() << ",\"x13\":" << d.x13.str()
          << ",\"x21\":" << d.x21.str() << ",\"x23\":" << d.x23.str()
          << ",\"x31\":" << d.x31.str() << ",\"x32\":" << d.x32.str() << "}";
    }
    if (s.basis)
        o << ",\"f\":[" << json_vector(s.basis->f1) << ","
          << json_vector(s.basis->f2) << "," << json_vector(s.basis->f3)
          << "]";
    if (s.diagnostics) {
        const DiagnosticsBundle& b = *s.diagnostics;
        o << ",\"diag\":{\"fq1\":" << b.fq1.str() << ",\"fq2\":"
          << b.fq2.str() << ",\"areas\":"
          << json_list({b.areas[0], b.areas[1], b.areas[2]})
          << ",\"vol_times2\":" << b.vol_times2.str() << ",\"z1\":"
          << b.z1.str() << ",\"z2\":" << b.z2.str() << ",\"z3\":"
          << b.z3.str() << ",\"z0\":" << b.z0.str() << "}";
    }
    o << "}";
    return o.str();
}

std::string solution_text(const Solution& s, std::int64_t micros, bool quiet)
{
    std::ostringstream o;
    o << "a      = " << tuple_text(s.a.values()) << "\n"
      << "method = " << to_string(s.method) << "\n"
      << "g      = " << s.g.str() << "\n"
      << "N      = " << s.N.str() << "\n";
    if (s.data) {
        const FrobeniusData& d = *s.data;
        o << "l      = " << tuple_text({d.l1, d.l2, d.l3}) << "\n"
          << "x      = (x12=" << d.x12.str() << ", x13=" << d.x13.str()
          << ", x21=" << d.x21.str() << ", x23=" << d.x23.str()
          << ", x31=" << d.x31.str() << ", x32=" << d.x32.str() << ")\n";
    }
    if (s.basis)
        o << "f      = (" << s.basis->f1.x1.str() << ", "
          << s.basis->f1.x2.str() << ", " << s.basis->f1.x3.str() << ") ("
          << s.basis->f2.x1.str() << ", " << s.basis->f2.x2.str() << ", "
          << s.basis->f2.x3.str() << ") (" << s.basis->f3.x1.str() << ", "
          << s.basis->f3.x2.str() << ", " << s.basis->f3.x3.str() << ")\n";
    if (s.diagnostics) {
        const DiagnosticsBundle& b = *s.diagnostics;
        o << "diag   = fq1=" << b.fq1.str() << " fq2=" << b.fq2.str()
          << " areas=" << tuple_text({b.areas[0], b.areas[1], b.areas[2]})
          << " 2vol=" << b.vol_times2.str() << " z=("
          << b.z1.str() << ", " << b.z2.str() << ", " << b.z3.str()
          << ") z0=" << b.z0.str() << "\n";
    }
    if (!quiet)
        o << "time   = " << micros << " us\n";
    return o.str();
}

// ------------------------------------------------------------------ solve

struct SolveFlags {
    bool json = false;
    bool diagnostics = false;
    bool oracle = false;
    bool quiet = false;
};

int solve_one(const Generators& a, const SolveFlags& flags, bool first)
{
    SolveOptions opts;
    opts.with_diagnostics = flags.diagnostics;
    opts.force_oracle = flags.oracle;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const Solution s = solve(a, opts);
        const auto t1 = std::chrono::steady_clock::now();
        const auto micros =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0)
                .count();
        if (flags.json) {
            std::cout << solution_json(s) << "\n";
            if (!flags.quiet)
                std::cerr << "# " << tuple_text(a.values()) << " solved in "
                          << micros << " us\n";
        } else {
            if (!first)
                std::cout << "\n";
            std::cout << solution_text(s, micros, flags.quiet);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (flags.json)
            std::cout << "{\"a\":" << json_list(a.values()) << ",\"error\":\""
                      << json_escape(e.what()) << "\"}\n";
        return exit_code_for(e);
    }
}

int run_solve(const std::vector<std::string>& args, const std::string& batch,
              const SolveFlags& flags)
{
    std::vector<Generators> instances;
    if (!batch.empty()) {
        if (!args.empty())
            throw UsageError("give generators or --batch, not both");
        instances = read_batch(batch);
    } else {
        instances.push_back(parse_generators(args));
    }
    int worst = kExitOk;
    bool first = true;
    for (const Generators& a : instances) {
        worst = std::max(worst, solve_one(a, flags, first));
        first = false;
    }
    return worst;
}

// ----------------------------------------------------------------- verify

struct VerifyOutcome {
    bool infinite = false;
    Int g, n;
    std::optional<FrobeniusData> data;
    std::string method;
};

VerifyOutcome pipeline_outcome(const Generators& a)
{
    VerifyOutcome out;
    try {
        const Solution s = solve(a);
        out.g = s.g;
        out.n = s.N;
        out.data = s.data;
        out.method = std::string(to_string(s.method));
    } catch (const InfiniteGapSet&) {
        out.infinite = true;
    }
    return out;
}

VerifyOutcome oracle_outcome(const Generators& a)
{
    VerifyOutcome out;
    out.method = "oracle";
    try {
        const GapSet gs = brute_gaps(a);
        out.g = gs.g();
        out.n = gs.count();
    } catch (const InfiniteGapSet&) {
        out.infinite = true;
        return out;
    }
    return out;
}

std::string outcome_json(const VerifyOutcome& o)
{
    if (o.infinite)
        return "\"infinite\"";
    std::string s = "{\"g\":" + o.g.str() + ",\"N\":" + o.n.str() + "}";
    return s;
}

/// Returns true when pipeline and oracle agree (including l/x when the
/// pipeline took the lattice route). Prints one report line.
bool verify_one(const Generators& a, bool json, bool quiet)
{
    const VerifyOutcome pipe = pipeline_outcome(a);
    const VerifyOutcome orac = oracle_outcome(a);

    bool match = pipe.infinite == orac.infinite;
    std::string detail;
    if (match && !pipe.infinite)
        match = pipe.g == orac.g && pipe.n == orac.n;
    if (match && pipe.data) {
        const BruteData bd = brute_lx(a);
        if (bd.data != *pipe.data) {
            match = false;
            detail = " (l/x differ from exhaustive search)";
        }
    }

    if (json) {
        if (!quiet || !match)
            std::cout << "{\"a\":" << json_list(a.values())
                      << ",\"pipeline\":" << outcome_json(pipe)
                      << ",\"oracle\":" << outcome_json(orac)
                      << ",\"match\":" << (match ? "true" : "false") << "}\n";
    } else if (!quiet || !match) {
        std::cout << "verify " << tuple_text(a.values()) << ": pipeline ";
        if (pipe.infinite)
            std::cout << "infinite";
        else
            std::cout << "g=" << pipe.g.str() << " N=" << pipe.n.str();
        std::cout << " | oracle ";
        if (orac.infinite)
            std::cout << "infinite";
        else
            std::cout << "g=" << orac.g.str() << " N=" << orac.n.str();
        std::cout << " | " << (match ? "MATCH" : "DIFF") << detail << "\n";
    }
    return match;
}

int run_verify(const std::vector<std::string>& args, const std::string& batch,
               unsigned random_count, std::uint64_t max_value,
               std::uint64_t seed, bool json, bool quiet)
{
    std::vector<Generators> instances;
    if (random_count > 0) {
        if (!args.empty() || !batch.empty())
            throw UsageError("--random excludes explicit generators and "
                             "--batch");
        std::mt19937_64 rng(seed);
        for (unsigned i = 0; i < random_count; ++i) {
            // every fifth instance exercises the common-factor route
            const auto t = (i % 5 == 4)
                               ? random_common_factor_triple(rng, max_value)
                               : random_pairwise_coprime_triple(rng, max_value);
            instances.push_back(Generators{t[0], t[1], t[2]});
        }
    } else if (!batch.empty()) {
        if (!args.empty())
            throw UsageError("give generators or --batch, not both");
        instances = read_batch(batch);
    } else {
        instances.push_back(parse_generators(args));
    }

    std::size_t matched = 0;
    for (const Generators& a : instances)
        if (verify_one(a, json, quiet))
            ++matched;

    if (instances.size() > 1 || random_count > 0) {
        if (json)
            std::cout << "{\"total\":" << instances.size() << ",\"matched\":"
                      << matched << "}\n";
        else
            std::cout << matched << "/" << instances.size() << " MATCH\n";
    }
    return matched == instances.size() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------- emit-geometry

int run_emit_geometry(const std::vector<std::string>& args)
{
    const Generators a = parse_generators(args);
    if (a.size() != 3)
        throw UsageError("geometry emission requires three generators");
    const Solution s = solve(a);
    if (!s.data || !s.basis)
        throw UsageError("geometry emission requires the lattice route; "
                         + tuple_text(a.values()) + " was solved via "
                         + std::string(to_string(s.method)));

    const FrobeniusData& d = *s.data;
    std::ostringstream o;
    o << "{\"a\":" << json_list(a.values());
    o << ",\"f\":[" << json_vector(s.basis->f1) << ","
      << json_vector(s.basis->f2) << "," << json_vector(s.basis->f3) << "]";
    o << ",\"l\":" << json_list({d.l1, d.l2, d.l3});
    o << ",\"x\":{\"x12\":" << d.x12.str() << ",\"x13\":" << d.x13.str()
      << ",\"x21\":" << d.x21.str() << ",\"x23\":" << d.x23.str()
      << ",\"x31\":" << d.x31.str() << ",\"x32\":" << d.x32.str() << "}";

    // directions of the three sector boundary lines in the kernel plane
    o << ",\"sector_directions\":["
      << json_vector({Int(0), -a[2], a[1]}) << ","
      << json_vector({a[2], Int(0), -a[0]}) << ","
      << json_vector({-a[1], a[0], Int(0)}) << "]";

    o << ",\"lshapes\":[";
    for (int i = 1; i <= 3; ++i) {
        const auto poly = lshape_polygon(a, d, i);
        const Int l[3] = {d.l1, d.l2, d.l3};
        const Int lj = l[i % 3], lk = l[(i + 1) % 3];
        if (i > 1)
            o << ",";
        o << "{\"index\":" << i << ",\"plane\":\"x" << i << "=0\",\"axes\":[\"x"
          << (i % 3) + 1 << "\",\"x" << ((i + 1) % 3) + 1 << "\"],\"vertices\":[";
        for (std::size_t t = 0; t < poly.size(); ++t) {
            if (t)
                o << ",";
            o << "[" << poly[t][0].str() << "," << poly[t][1].str() << "]";
        }
        const Int area = a[static_cast<std::size_t>(i - 1)];
        o << "],\"area\":" << area.str() << ",\"boundary_points\":"
          << Int(2 * (lj + lk)).str() << ",\"interior_points\":"
          << Int(area - (lj + lk) + 1).str() << "}";
    }
    o << "]}";
    std::cout << o.str() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frobenius number g and gap count N for two or three "
                 "generators, via lattice basis reduction"};
    app.require_subcommand(1);

    std::vector<std::string> solve_args, verify_args, emit_args;
    std::string solve_batch, verify_batch;
    SolveFlags solve_flags;
    bool verify_json = false, verify_quiet = false;
    unsigned random_count = 0;
    std::uint64_t max_value = 300, seed = 0;

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "compute g and N for generators");
    solve_cmd->add_option("generators", solve_args,
                          "2 or 3 positive integers (any length)");
    solve_cmd->add_option("--batch", solve_batch,
                          "file with one instance per line");
    solve_cmd->add_flag("--json", solve_flags.json, "one JSON record per line");
    solve_cmd->add_flag("--diagnostics", solve_flags.diagnostics,
                        "attach the geometric identity battery");
    solve_cmd->add_flag("--oracle", solve_flags.oracle,
                        "force brute-force enumeration");
    solve_cmd->add_flag("--quiet", solve_flags.quiet, "suppress timings");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "cross-check the pipeline against brute force");
    verify_cmd->add_option("generators", verify_args,
                           "2 or 3 positive integers");
    verify_cmd->add_option("--batch", verify_batch,
                           "file with one instance per line");
    verify_cmd->add_option("--random", random_count,
                           "verify N seeded random triples");
    verify_cmd->add_option("--max", max_value,
                           "upper bound for random generators");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_flag("--json", verify_json, "one JSON record per line");
    verify_cmd->add_flag("--quiet", verify_quiet,
                         "report only mismatches and the summary");

    CLI::App* emit_cmd = app.add_subcommand(
        "emit-geometry", "emit L-shapes, basic vectors and sector lines");
    emit_cmd->add_option("generators", emit_args, "3 positive integers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(solve_args, solve_batch, solve_flags);
        if (verify_cmd->parsed())
            return run_verify(verify_args, verify_batch, random_count,
                              max_value, seed, verify_json, verify_quiet);
        return run_emit_geometry(emit_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
