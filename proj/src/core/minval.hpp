#pragma once

#include "core/elim.hpp"
#include "core/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace s2m::minval {

/// Constrained minimal value problem:
///   f(x) = -b sum_i x_i - sum_{i<j} x_i x_j   subject to   sum_i a_i x_i + C = 0.
struct MinProblem {
    int dim;                // N >= 2
    double b;               // linear coefficient
    double cap_c;           // constraint constant C
    std::vector<double> a;  // constraint normal, nonzero

    MinProblem(int n, double b_, double cap_c_, std::vector<double> a_);

    double sum_a() const;     // sum a_i
    double sum_a_sq() const;  // sum a_i^2
};

enum class Class { WellPosed, DegenerateBounded, DegenerateUnbounded, Unbounded };
const char* to_string(Class c);

/// Discriminant D = (sum a)^2 - (N-1) sum a^2 and the induced class, compared
/// against the scale-invariant band |D| <= 1e-12 * sum a^2.
struct Wellposedness {
    double discriminant;
    Class cls;
};

enum class Method { EigenDecomp, Lagrange, Oracle };
const char* to_string(Method m);

struct MinSolution {
    double value;
    std::vector<double> minimizer;
    double multiplier;
    Method method;
};

/// Decomposition a = <a,e_N> e_N + d e_1 with e_N = (1,...,1)/sqrt(N).
/// e_1 is empty when d = 0 (then a is a multiple of e_N and no transverse
/// direction exists).
struct SpectralData {
    double d;
    std::vector<double> e_n;
    std::vector<double> e_1;
};

class NotWellPosed : public std::runtime_error {
public:
    explicit NotWellPosed(const Wellposedness& wp);
    Wellposedness wellposedness;
};

Wellposedness check_conditions(const MinProblem& p);

double evaluate_f(const MinProblem& p, std::span<const double> x);

/// Closed-form minimum
///   {b^2[(sum a)^2 - N sum a^2] + 2bC sum a - (N-1)C^2} / {2[(sum a)^2 - (N-1) sum a^2]}.
/// Throws NotWellPosed (carrying the class) unless the problem is WellPosed.
/// Continuous through the all-equal-a case, so no branch is needed here.
double min_value_closed_form(const MinProblem& p);

SpectralData spectral_data(const MinProblem& p);

/// Method 1: eigenvector decomposition of the quadratic part.
MinSolution solve_eigendecomp(const MinProblem& p);

/// Method 2: Lagrange multipliers,
///   mu0 = [b sum a - (N-1)C] / D,   x0_i = -b/(N-1) + mu0 sum a/(N-1) - mu0 a_i.
MinSolution solve_lagrange(const MinProblem& p);

struct OracleOutcome {
    Class cls;
    std::optional<MinSolution> solution;  // present iff cls == WellPosed
};

/// Independent route: eliminate the largest-|a_j| variable through the
/// constraint, classify the reduced Hessian, solve when positive definite.
OracleOutcome oracle_minimize(const MinProblem& p);

Class classify(elim::Classification c);

/// Builds the elim form of f restricted by the constraint (shared with the
/// degenerate sub-classification and with the sigma_k explorer).
elim::Problem elim_form(const MinProblem& p);

struct FuzzOptions {
    std::uint64_t seed = 0;
    long long trials = 1;
    int n_min = 2;
    int n_max = 12;
    int feasible_samples = 100;   // lower-bound probes per instance
    int direction_samples = 100;  // strict-minimality probes per instance
    int shards = 1;
};

struct FuzzReport {
    std::uint64_t seed = 0;
    long long trials = 0;
    int n_min = 2;
    int n_max = 12;
    double max_value_dev = 0.0;        // pairwise, closed form / both methods / oracle
    double max_minimizer_dev = 0.0;    // componentwise, scaled by 1 + |x|_inf
    double max_multiplier_dev = 0.0;
    double max_constraint_residual = 0.0;
    long long lower_bound_violations = 0;
    long long uniqueness_violations = 0;
    long long implication_violations = 0;  // sampled a with D > 0 but sum a == 0
    long long worst_trial = -1;
    std::optional<MinProblem> worst;  // instance with the largest value deviation

    bool pass() const {
        return max_value_dev <= 1e-9 && max_minimizer_dev <= 1e-8 &&
               lower_bound_violations == 0 && uniqueness_violations == 0 &&
               implication_violations == 0;
    }
};

/// Deterministically samples WellPosed instances, runs all solver routes and
/// the oracle, and reports the worst disagreements. Per-trial RNG streams are
/// keyed by (seed, trial), so the report is byte-identical for any shard
/// count.
FuzzReport fuzz_compare(const FuzzOptions& opt);

/// One WellPosed instance: a = sign*s*(1,..,1) + tau*u with tau rejected
/// until D > 0.05 * sum a^2; b, C uniform in [-10, 10].
MinProblem sample_wellposed(Rng& rng, int n_min, int n_max);

}  // namespace s2m::minval
