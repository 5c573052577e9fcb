#pragma once

#include "core/estimate.hpp"
#include "core/rng.hpp"
#include "core/symfun.hpp"

#include <cstdint>
#include <string>

namespace s2m::suites {

/// Random lambda in Gamma_2 with the sampling margin sigma_1 >= 0.05 max(1,|lambda|),
/// sigma_2 >= 0.05 max(1,|lambda|^2), entries within [-5,5].
symfun::LambdaVec sample_gamma2_margin(Rng& rng, int n);

/// Random lambda in Gamma_k (strict membership plus a small absolute floor on
/// sigma_1..sigma_k to stay off the cone boundary).
symfun::LambdaVec sample_gamma_k(Rng& rng, int n, int k);

struct SymcheckOptions {
    std::uint64_t seed = 0;
    long long trials = 1;
};

/// Worst relative residuals of the identity suites over seeded random draws.
/// Residuals are scaled by the sum of the magnitudes of the terms entering
/// each identity, evaluated on |lambda| (that is the level at which floating
/// point can be held to account; a raw |sigma_k| denominator is not
/// attainable under cancellation).
struct SymcheckReport {
    std::uint64_t seed = 0;
    long long trials = 0;
    double worst_sym31 = 0.0;  // sigma_k = sigma_k(.|i) + lambda_i sigma_{k-1}(.|i)
    double worst_sym32 = 0.0;  // sum_i lambda_i sigma_{k-1}(.|i) = k sigma_k
    double worst_sym33 = 0.0;  // sum_i sigma_k(.|i) = (n-k) sigma_k
    double worst_id326 = 0.0;
    double worst_id327 = 0.0;
    double worst_coeff = 0.0;
    double worst_remark42 = 0.0;
    double worst_point_min = 0.0;
    double worst_explore2 = 0.0;
    long long remark42_lb_violations = 0;
    bool positivity_ok = true;      // (3-sum) and (square-sum) positivity on Gamma_2
    bool point_wellposed_ok = true; // point problems classify WellPosed on Gamma_2

    bool pass() const {
        return worst_sym31 <= 1e-12 && worst_sym32 <= 1e-12 && worst_sym33 <= 1e-12 &&
               worst_id326 <= 1e-10 && worst_id327 <= 1e-10 && worst_coeff <= 1e-10 &&
               worst_remark42 <= 1e-10 && worst_point_min <= 1e-10 &&
               worst_explore2 <= 1e-10 && remark42_lb_violations == 0 && positivity_ok &&
               point_wellposed_ok;
    }
};

SymcheckReport run_symcheck(const SymcheckOptions& opt);

std::string symcheck_report_to_json(const SymcheckReport& rep);

struct ExploreOptions {
    int n = 4;
    int k = 3;
    std::uint64_t seed = 0;
    long long trials = 1;
};

/// CSV rows "n,k,lambda...,b,C,class,value". The first two rows are the fixed
/// fixtures lambda = (1,...,1) with (b,C) = (0,0) and (1,0); the rest are
/// seeded random draws. value is "nan" when no finite minimum exists.
std::string run_explore_csv(const ExploreOptions& opt);

}  // namespace s2m::suites
