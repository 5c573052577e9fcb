#pragma once

#include "core/estimate.hpp"
#include "core/geomkit.hpp"
#include "core/minval.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace s2m::io {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// All numbers in emitted JSON/CSV use 17 significant digits ('.' decimal),
/// enough to round-trip any double.
std::string fmt(double v);

minval::MinProblem problem_from_json(const std::string& text);
std::string problem_to_json(const minval::MinProblem& p);

std::string solution_to_json(const minval::MinSolution& sol, minval::Class cls);
std::string wellposedness_to_json(const minval::Wellposedness& wp);

std::string fuzz_report_to_json(const minval::FuzzReport& rep);

estimate::PointData point_data_from_json(const std::string& text);
std::string point_data_to_json(const estimate::PointData& pd);

geomkit::SurfaceSpec surface_spec_from_json(const std::string& text);
std::string surface_report_to_json(const geomkit::SurfaceReport& rep);

/// CSV columns: theta, phi, X1, X2, X3, N1, N2, N3, kappa1, kappa2, support,
/// sigma2, phi_value (phi_value = sigma2 / support^alpha, meaningful where
/// sigma2 > 0).
std::string samples_to_csv(const std::vector<geomkit::SurfaceSample>& samples, double alpha);

}  // namespace s2m::io
