// sigma2min command-line front end. Talks to the shared library exclusively
// through the public C API; everything here is argument plumbing and I/O.
//
// Exit codes: 0 success; 2 domain verdict (not well-posed / not 2-convex);
// 3 solver disagreement; 64 usage or malformed input; 65 invalid surface
// spec; 66 missing input file.

#include <CLI11.hpp>

#include "sigma2min/sigma2min.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBadSpec = 65;
constexpr int kExitNoInput = 66;

struct Fail {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Fail{kExitNoInput, "cannot open input file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Fail{kExitUsage, "cannot open output file: " + path};
    out << text;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    s2m_string_free(s);
    return out;
}

const char* class_name(s2m_class c) {
    switch (c) {
        case S2M_WELL_POSED: return "WellPosed";
        case S2M_DEGENERATE_BOUNDED: return "DegenerateBounded";
        case S2M_DEGENERATE_UNBOUNDED: return "DegenerateUnbounded";
        case S2M_UNBOUNDED: return "Unbounded";
    }
    return "?";
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void fail_status(s2m_status st, int parse_code) {
    const std::string msg = s2m_last_error();
    switch (st) {
        case S2M_ERR_PARSE: throw Fail{parse_code, "input error: " + msg};
        case S2M_ERR_INVALID_ARGUMENT: throw Fail{parse_code, "input error: " + msg};
        case S2M_ERR_GRID: throw Fail{kExitBadSpec, "grid error: " + msg};
        default: throw Fail{1, "error: " + msg};
    }
}

int run_minsolve(const std::string& input, const std::string& output) {
    const std::string text = read_file(input);
    s2m_problem* problem = nullptr;
    if (s2m_status st = s2m_problem_from_json(text.c_str(), &problem)) fail_status(st, kExitUsage);

    double disc = 0.0;
    s2m_class cls = S2M_WELL_POSED;
    s2m_check_conditions(problem, &disc, &cls);
    if (cls != S2M_WELL_POSED) {
        const std::string record = std::string("{\"discriminant\":") + fmt17(disc) +
                                   ",\"class\":\"" + class_name(cls) + "\"}";
        write_output(record, output);
        s2m_problem_free(problem);
        return kExitDomain;
    }

    s2m_solution* lagrange = nullptr;
    s2m_solution* eigen = nullptr;
    s2m_solution* oracle = nullptr;
    if (s2m_status st = s2m_solve(problem, S2M_METHOD_LAGRANGE, &lagrange))
        fail_status(st, kExitUsage);
    if (s2m_status st = s2m_solve(problem, S2M_METHOD_EIGEN, &eigen)) fail_status(st, kExitUsage);
    if (s2m_status st = s2m_solve(problem, S2M_METHOD_ORACLE, &oracle)) fail_status(st, kExitUsage);

    const int n = s2m_solution_dim(lagrange);
    std::vector<double> xl(n), xe(n), xo(n);
    s2m_solution_minimizer(lagrange, xl.data());
    s2m_solution_minimizer(eigen, xe.data());
    s2m_solution_minimizer(oracle, xo.data());
    const double vl = s2m_solution_value(lagrange);
    const double ve = s2m_solution_value(eigen);
    const double vo = s2m_solution_value(oracle);

    bool agree = std::abs(vl - ve) <= 1e-9 * (1.0 + std::abs(vl)) &&
                 std::abs(vl - vo) <= 1e-9 * (1.0 + std::abs(vl));
    double xnorm = 0.0;
    for (double v : xl) xnorm = std::max(xnorm, std::abs(v));
    for (int i = 0; i < n && agree; ++i)
        agree = std::abs(xl[i] - xe[i]) <= 1e-8 * (1.0 + xnorm) &&
                std::abs(xl[i] - xo[i]) <= 1e-8 * (1.0 + xnorm);

    char* json = nullptr;
    s2m_solution_to_json(lagrange, &json);
    const std::string body = take_string(json);

    s2m_solution_free(lagrange);
    s2m_solution_free(eigen);
    s2m_solution_free(oracle);
    s2m_problem_free(problem);

    if (!agree) {
        std::cerr << "solver routes disagree beyond tolerance\n";
        std::cout << body << '\n';
        return kExitDisagree;
    }
    write_output(body, output);
    return kExitOk;
}

int run_verify(std::uint64_t seed, long long trials, int n_max, const std::string& output) {
    if (trials < 1) throw Fail{kExitUsage, "verify: trials must be >= 1"};
    if (n_max < 2) throw Fail{kExitUsage, "verify: n must be >= 2"};
    s2m_verify_summary summary{};
    char* json = nullptr;
    if (s2m_status st = s2m_verify_run(seed, trials, 2, n_max, &summary, &json))
        fail_status(st, kExitUsage);
    write_output(take_string(json), output);
    return summary.pass ? kExitOk : kExitDisagree;
}

int run_symcheck(std::uint64_t seed, long long trials, const std::string& output) {
    if (trials < 1) throw Fail{kExitUsage, "symcheck: trials must be >= 1"};
    int pass = 0;
    char* json = nullptr;
    if (s2m_status st = s2m_symcheck_run(seed, trials, &pass, &json)) fail_status(st, kExitUsage);
    write_output(take_string(json), output);
    return pass ? kExitOk : kExitDisagree;
}

int run_surface(const std::string& input, double alpha, const std::string& output) {
    const std::string text = read_file(input);
    s2m_surface* surface = nullptr;
    if (s2m_status st = s2m_surface_from_json(text.c_str(), &surface))
        fail_status(st, kExitBadSpec);

    char* report = nullptr;
    if (s2m_status st = s2m_surface_report_json(surface, &report)) fail_status(st, kExitBadSpec);
    std::cout << take_string(report) << '\n';

    s2m_surface_summary summary{};
    s2m_surface_summary_get(surface, &summary);

    if (!output.empty()) {
        char* csv = nullptr;
        if (s2m_status st = s2m_surface_csv(surface, alpha, &csv)) fail_status(st, kExitBadSpec);
        write_output(take_string(csv), output);
    }
    s2m_surface_free(surface);
    return summary.two_convex ? kExitOk : kExitDomain;
}

int run_explore(int n, int k, std::uint64_t seed, long long trials, const std::string& output) {
    if (n < 2 || k < 2 || k > n)
        throw Fail{kExitUsage, "explore: need 2 <= k <= n"};
    if (trials < 0) throw Fail{kExitUsage, "explore: trials must be >= 0"};
    char* csv = nullptr;
    if (s2m_status st = s2m_explore_csv(n, k, seed, trials, &csv)) fail_status(st, kExitUsage);
    write_output(take_string(csv), output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sigma2min: constrained minimal-value solvers, symmetric-function "
                 "identity suites, and star-shaped surface curvature analysis"};
    app.require_subcommand(1);

    std::string input, output;
    std::uint64_t seed = 0;
    long long trials = 1;
    double alpha = 1.0;
    int n = 4, k = 3, n_max = 12;
    std::string format = "json";

    CLI::App* minsolve = app.add_subcommand(
        "minsolve", "solve a MinProblem JSON file and cross-check all routes");
    minsolve->add_option("--input", input, "MinProblem JSON file")->required();
    minsolve->add_option("--output", output, "write the result here instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "fuzz-compare the solver routes on random instances");
    verify->add_option("--seed", seed, "RNG seed (default 0)");
    verify->add_option("--trials", trials, "number of instances");
    verify->add_option("--n", n_max, "largest dimension to sample (default 12)");
    verify->add_option("--output", output, "write the summary here as well");

    CLI::App* symcheck =
        app.add_subcommand("symcheck", "run the symmetric-function identity suites");
    symcheck->add_option("--seed", seed, "RNG seed (default 0)");
    symcheck->add_option("--trials", trials, "number of random draws");
    symcheck->add_option("--output", output, "write the summary here as well");

    CLI::App* surface = app.add_subcommand(
        "surface", "analyze a surface spec: report to stdout, samples CSV to --output");
    surface->add_option("--input", input, "SurfaceSpec JSON file")->required();
    surface->add_option("--alpha", alpha, "support exponent (default 1)");
    surface->add_option("--output", output, "per-sample CSV path");

    CLI::App* explore =
        app.add_subcommand("explore", "sweep the sigma_k minimal-value explorer to CSV");
    explore->add_option("--n", n, "number of curvatures (default 4)");
    explore->add_option("--k", k, "symmetric-function order (default 3)");
    explore->add_option("--seed", seed, "RNG seed (default 0)");
    explore->add_option("--trials", trials, "random rows after the fixtures");
    explore->add_option("--output", output, "CSV path (default stdout)");

    for (CLI::App* sub : {minsolve, verify, symcheck, surface, explore})
        sub->add_option("--format", format, "output format (json outputs are fixed)")
            ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (minsolve->parsed()) return run_minsolve(input, output);
        if (verify->parsed()) return run_verify(seed, trials, n_max, output);
        if (symcheck->parsed()) return run_symcheck(seed, trials, output);
        if (surface->parsed()) return run_surface(input, alpha, output);
        if (explore->parsed()) return run_explore(n, k, seed, trials, output);
    } catch (const Fail& f) {
        std::cerr << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
