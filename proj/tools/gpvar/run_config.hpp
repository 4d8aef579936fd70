#pragma once

#include "gpvar/params.hpp"
#include "gpvar/solver.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gpvar::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_collapse = 3,
    exit_nonconvergence = 4,
    exit_oracle_mismatch = 5,
};

/// Bad user input. `flag` names the offending option.
class UsageError : public std::runtime_error {
public:
    UsageError(std::string flag, const std::string& what)
        : std::runtime_error(flag.empty() ? what : flag + ": " + what), flag_(std::move(flag)) {}
    const std::string& flag() const { return flag_; }

private:
    std::string flag_;
};

/// Values as given on the command line; unset means "take from the config
/// file or the default".
struct RawOptions {
    std::optional<std::string> model;
    std::optional<std::string> units;
    std::optional<double> mass, omega, hbar;
    std::optional<double> a_s, b, bn, big_a, gamma, n;
    std::optional<double> sigma, sigma_min, sigma_max;
    std::optional<int> steps;
    bool log_grid = false;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    bool no_header = false;
};

/// Fully resolved configuration, in the units the user chose and reduced to
/// oscillator units.
struct RunConfig {
    std::string command;
    std::string model = "local";
    std::string units = "oscillator";
    TrapGasParams params;
    std::optional<double> a_s;
    InteractionKernel kernel = Contact{};         ///< as given
    InteractionKernel reduced_kernel = Contact{}; ///< oscillator units
    DimensionlessScale scale;
    double n = 1.0;
    std::optional<double> sigma; ///< oscillator units
    SigmaWindow window;          ///< oscillator units
    int steps = 200;
    bool log_grid = false;
    std::string format = "json";
    std::optional<std::string> out;
    std::uint64_t seed = 20240611;
    std::optional<double> tol;
    bool header = true;

    Model model_value() const;
    double reduced_b() const;
    nlohmann::json to_json() const;
};

/// Merges the JSON config file (if any) with flags; flags win.
RunConfig resolve(const std::string& command, const RawOptions& raw,
                  const std::string& default_format = "json");

} // namespace gpvar::cli
