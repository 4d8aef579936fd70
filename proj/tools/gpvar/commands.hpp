#pragma once

#include "run_config.hpp"

#include <optional>
#include <string>

namespace gpvar::cli {

struct GpeOptions {
    int points = 65536;
    double r_max = 12.0;
    std::optional<double> dtau;
    int max_iters = 100000;
    double energy_tol = 1e-14;
    std::string stepper = "semi-implicit";
    std::optional<double> init_sigma;
    std::optional<std::string> profile;
    std::optional<std::string> history;
};

struct ValidateOptions {
    bool skip_nonlocal_quadrature = false;
};

int cmd_energy(const RunConfig& cfg);
int cmd_branches(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_critical(const RunConfig& cfg);
int cmd_gpe(const RunConfig& cfg, const GpeOptions& gpe);
int cmd_validate(const RunConfig& cfg, const ValidateOptions& opts);

} // namespace gpvar::cli
