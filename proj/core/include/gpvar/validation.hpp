#pragma once

// The closed-form-versus-oracle program behind `gpvar validate`.

#include "gpvar/nonlocal_model.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gpvar {

struct ValidationOptions {
    double energy_tol = 1e-9;     ///< closed-form energy vs quadrature, relative
    double n_tol = 1e-6;          ///< closed-form N(sigma) vs stationarity oracle, relative
    double derivative_tol = 1e-8; ///< analytic vs finite-difference dE/dsigma, relative
    /// Replaces every tolerance above when set.
    std::optional<double> tolerance_override;
    bool include_nonlocal_quadrature = true;
    std::uint64_t seed = 20240611;
    std::int64_t mc_samples = 1000000;
};

/// Monte Carlo check of the angular-average reduction used by the screened
/// quadrature, at A = 1, Gamma = 1, sigma = 1.
struct MonteCarloCheck {
    double estimate = 0.0;
    double std_error = 0.0;
    double quadrature = 0.0;
    double z_score = 0.0;
    bool pass = false; ///< within 3 standard errors
};

struct ValidationPoint {
    nlohmann::json at; ///< coordinates of the check
    double closed_form = 0.0;
    double oracle = 0.0;
    double rel_error = 0.0;
    bool pass = false;
};

struct ValidationSection {
    std::string name;
    double tolerance = 0.0;
    std::vector<ValidationPoint> points;
    double max_rel_error = 0.0;
    bool pass = true;
};

struct VariantAgreement {
    nonlocal::ErfcArgument variant;
    double max_rel_error = 0.0;
    int compared = 0;
};

struct ValidationReport {
    std::vector<ValidationSection> sections;
    std::vector<VariantAgreement> variants;
    nonlocal::ErfcArgument resolved_variant = nonlocal::default_erfc_argument;
    std::optional<MonteCarloCheck> monte_carlo;
    bool pass = true;
};

ValidationReport run_validation(const ValidationOptions& options = {});

nlohmann::json to_json(const ValidationReport& report);

/// |x - ref| / |ref|, or |x - ref| when ref == 0.
double relative_error(double value, double reference);

/// Parameter sets on which the closed-form N(sigma) is cross-checked.
std::vector<NonlocalModel> n_of_sigma_validation_params();

/// Widths 0.3..3 used by the N(sigma) cross-check.
std::vector<double> n_of_sigma_validation_sigmas();

/// Compares one closed-form variant with the oracle across the validation
/// grid, skipping points where either side is undefined or non-positive.
VariantAgreement compare_variant(nonlocal::ErfcArgument variant,
                                 std::vector<ValidationPoint>* points = nullptr,
                                 double tolerance = 0.0);

} // namespace gpvar
