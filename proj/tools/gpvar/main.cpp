#include "commands.hpp"
#include "run_config.hpp"

#include "gpvar/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gpvar::cli;

namespace {

void add_shared(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--model", raw.model, "local | nonlocal");
    sub->add_option("--units", raw.units, "oscillator | si");
    sub->add_option("--mass", raw.mass, "particle mass (si units)");
    sub->add_option("--omega", raw.omega, "trap angular frequency (si units)");
    sub->add_option("--hbar", raw.hbar, "reduced Planck constant");
    sub->add_option("--a-s", raw.a_s, "s-wave scattering length; sets B = 4 pi hbar^2 a_s / m");
    sub->add_option("--b", raw.b, "contact strength B");
    sub->add_option("--bN", raw.bn, "combined coupling b*N (sets N = 1)");
    sub->add_option("--A", raw.big_a, "screened amplitude A >= 0");
    sub->add_option("--Gamma", raw.gamma, "screening rate Gamma >= 0");
    sub->add_option("--N", raw.n, "boson number");
    sub->add_option("--sigma", raw.sigma, "Gaussian width");
    sub->add_option("--sigma-min", raw.sigma_min, "lower edge of the width window");
    sub->add_option("--sigma-max", raw.sigma_max, "upper edge of the width window");
    sub->add_option("--steps", raw.steps, "grid points for sweeps");
    sub->add_flag("--log-grid", raw.log_grid, "log-spaced sweep grid");
    sub->add_option("--format", raw.format, "json | csv");
    sub->add_option("--out", raw.out, "write output to a file");
    sub->add_option("--config", raw.config, "JSON config file; flags take precedence");
    sub->add_option("--seed", raw.seed, "Monte Carlo seed");
    sub->add_option("--tol", raw.tol, "override validation tolerances");
    sub->add_flag("--no-header", raw.no_header, "omit the echoed config");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian variational analysis of trapped Bose gases"};
    app.require_subcommand(1);

    RawOptions raw;
    GpeOptions gpe;
    ValidateOptions val;

    struct Entry {
        const char* name;
        const char* help;
        const char* default_format;
    };
    const Entry entries[] = {
        {"energy", "energy decomposition at one width", "json"},
        {"branches", "stationary widths at fixed N", "json"},
        {"sweep", "N(sigma) stationarity curve", "csv"},
        {"critical", "collapse threshold (sigma_min, N_max)", "json"},
        {"gpe", "imaginary-time radial Gross-Pitaevskii solve", "json"},
        {"validate", "closed forms against numerical oracles", "json"},
    };
    std::vector<CLI::App*> subs;
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_shared(sub, raw);
        subs.push_back(sub);
    }
    CLI::App* gpe_cmd = subs[4];
    gpe_cmd->add_option("--points", gpe.points, "radial grid intervals");
    gpe_cmd->add_option("--r-max", gpe.r_max, "outer radius");
    gpe_cmd->add_option("--dtau", gpe.dtau, "imaginary-time step");
    gpe_cmd->add_option("--max-iters", gpe.max_iters, "iteration budget");
    gpe_cmd->add_option("--energy-tol", gpe.energy_tol, "energy change stop criterion");
    gpe_cmd->add_option("--stepper", gpe.stepper, "semi-implicit | explicit");
    gpe_cmd->add_option("--init-sigma", gpe.init_sigma, "width of the Gaussian start");
    gpe_cmd->add_option("--profile", gpe.profile, "write r,psi,u to a CSV file");
    gpe_cmd->add_option("--history", gpe.history, "write the energy history to a CSV file");
    subs[5]->add_flag("--skip-nonlocal-quadrature", val.skip_nonlocal_quadrature,
                      "skip the slow screened-energy quadrature");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (!subs[i]->parsed())
                continue;
            const RunConfig cfg = resolve(entries[i].name, raw, entries[i].default_format);
            switch (i) {
            case 0: return cmd_energy(cfg);
            case 1: return cmd_branches(cfg);
            case 2: return cmd_sweep(cfg);
            case 3: return cmd_critical(cfg);
            case 4: return cmd_gpe(cfg, gpe);
            default: return cmd_validate(cfg, val);
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "gpvar: " << e.what() << '\n';
        return exit_validation;
    } catch (const gpvar::DomainError& e) {
        std::cerr << "gpvar: " << e.what() << '\n';
        return exit_validation;
    } catch (const gpvar::CollapseError& e) {
        std::cerr << "gpvar: " << e.what() << '\n';
        return exit_collapse;
    } catch (const gpvar::ConvergenceError& e) {
        std::cerr << "gpvar: " << e.what() << '\n';
        return exit_nonconvergence;
    } catch (const gpvar::BracketError& e) {
        std::cerr << "gpvar: " << e.what() << '\n';
        return exit_nonconvergence;
    }
    return exit_validation;
}
