#include "commands.hpp"

#include "gpvar/curve_io.hpp"
#include "gpvar/errors.hpp"
#include "gpvar/format.hpp"
#include "gpvar/gpe_radial.hpp"
#include "gpvar/validation.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace gpvar::cli {

namespace {

// Writes either to --out or stdout.
class Sink {
public:
    explicit Sink(const std::optional<std::string>& path) {
        if (path) {
            file_.open(*path);
            if (!file_)
                throw UsageError("--out", "cannot write '" + *path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_json(const RunConfig& cfg, const nlohmann::json& result) {
    Sink sink(cfg.out);
    nlohmann::json doc = result;
    if (cfg.header)
        doc = {{"config", cfg.to_json()}, {"result", result}};
    sink.stream() << doc.dump(2) << '\n';
}

template <class WriteBody>
void emit_csv(const RunConfig& cfg, WriteBody&& body) {
    Sink sink(cfg.out);
    if (cfg.header)
        sink.stream() << "# config: " << cfg.to_json().dump() << '\n';
    body(sink.stream());
}

std::string csv_row(std::initializer_list<double> values) {
    std::string row;
    for (double v : values) {
        if (!row.empty())
            row += ',';
        row += format_double(v);
    }
    return row;
}

const NonlocalModel* as_nonlocal(const Model& m) { return std::get_if<NonlocalModel>(&m); }

} // namespace

int cmd_energy(const RunConfig& cfg) {
    if (!cfg.sigma)
        throw UsageError("--sigma", "is required");
    const Model model = cfg.model_value();
    const EnergyBreakdown e = energy(model, *cfg.sigma);
    if (cfg.format == "csv") {
        emit_csv(cfg, [&](std::ostream& out) {
            out << "sigma,n,e_total,e_kin,e_trap,e_int\n"
                << csv_row({*cfg.sigma, cfg.n, e.total, e.kinetic, e.trap, e.interaction}) << '\n';
        });
    } else {
        nlohmann::json result = {{"sigma", *cfg.sigma}, {"n", cfg.n}, {"energy", to_json(e)}};
        if (cfg.units == "si")
            result["energy_si"] = to_json(e.scaled(cfg.scale.energy_unit));
        emit_json(cfg, result);
    }
    return exit_ok;
}

int cmd_branches(const RunConfig& cfg) {
    const Model model = cfg.model_value();
    const std::vector<StationaryPoint> points = find_branches(model, cfg.n, cfg.window);
    if (cfg.format == "csv") {
        emit_csv(cfg, [&](std::ostream& out) { write_csv(out, points); });
    } else {
        emit_json(cfg, {{"count", points.size()}, {"points", to_json(points)}});
    }
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg) {
    const Model model = cfg.model_value();
    const BranchCurve curve = sweep(model, cfg.window.lo, cfg.window.hi, cfg.steps, cfg.log_grid);
    if (cfg.format == "csv")
        emit_csv(cfg, [&](std::ostream& out) { write_csv(out, curve); });
    else
        emit_json(cfg, to_json(curve));
    return exit_ok;
}

int cmd_critical(const RunConfig& cfg) {
    const Model model = cfg.model_value();
    const double b = contact_coupling(model);
    if (!(b < 0.0))
        throw UsageError("--b", "critical point requires an attractive coupling (b < 0), got " +
                                    format_double(b));
    const CriticalPoint cp = critical_scan(model, cfg.window);
    nlohmann::json result = {{"sigma_min", cp.sigma_min},
                             {"n_max", cp.n_max},
                             {"n_max_floor", std::floor(cp.n_max)}};
    // |a_s| / a_ho = |b| / (4 pi) in oscillator units
    const double abs_a_s = std::abs(b) / (4.0 * std::numbers::pi);
    const NonlocalModel* nl = as_nonlocal(model);
    const bool contact_only = nl == nullptr || nl->a == 0.0;
    if (contact_only) {
        const CriticalPoint analytic = local::critical_point(b);
        result["n_max_abs_a_s"] = cp.n_max * abs_a_s;
        result["analytic"] = {{"sigma_min", analytic.sigma_min}, {"n_max", analytic.n_max}};
    }
    if (cfg.units == "si")
        result["sigma_min_si"] = cp.sigma_min * cfg.scale.length_unit;
    if (cfg.format == "csv") {
        emit_csv(cfg, [&](std::ostream& out) {
            out << "sigma_min,n_max,n_max_floor" << (contact_only ? ",n_max_abs_a_s" : "") << '\n';
            out << csv_row({cp.sigma_min, cp.n_max, std::floor(cp.n_max)});
            if (contact_only)
                out << ',' << format_double(cp.n_max * abs_a_s);
            out << '\n';
        });
    } else {
        emit_json(cfg, result);
    }
    return exit_ok;
}

int cmd_gpe(const RunConfig& cfg, const GpeOptions& gpe) {
    if (cfg.model != "local")
        throw UsageError("--model", "the grid solver supports the local model only");
    const double coupling = cfg.reduced_b() * cfg.n;
    RadialGrid grid{gpe.r_max, gpe.points};
    RelaxConfig rc;
    if (gpe.stepper == "semi-implicit")
        rc.stepper = Stepper::semi_implicit;
    else if (gpe.stepper == "explicit")
        rc.stepper = Stepper::explicit_euler;
    else
        throw UsageError("--stepper", "must be 'semi-implicit' or 'explicit'");
    if (gpe.dtau) {
        if (!(*gpe.dtau > 0.0))
            throw UsageError("--dtau", "must be positive");
        rc.dtau = *gpe.dtau;
    }
    rc.max_iters = gpe.max_iters;
    rc.energy_tol = gpe.energy_tol;
    if (gpe.init_sigma) {
        if (!(*gpe.init_sigma > 0.0))
            throw UsageError("--init-sigma", "must be positive");
        rc.initial_sigma = *gpe.init_sigma;
    }
    try {
        grid.validate();
    } catch (const DomainError& e) {
        throw UsageError("--points", e.what());
    }

    // Gaussian variational reference
    const std::vector<StationaryPoint> branches =
        find_branches(LocalModel(coupling, 1.0), 1.0, SigmaWindow{1e-3, 10.0});
    std::optional<StationaryPoint> variational;
    for (const StationaryPoint& p : branches)
        if (p.kind == PointKind::minimum && (!variational || p.energy.total < variational->energy.total))
            variational = p;

    try {
        const RadialState state = relax(coupling, grid, rc);
        const double residual = virial_residual(state);
        nlohmann::json result = {{"coupling_bN", coupling},
                                 {"iterations", state.iterations},
                                 {"energy", to_json(state.energy)},
                                 {"mu", state.mu},
                                 {"norm", state.norm},
                                 {"rms_radius", state.rms_radius},
                                 {"virial_residual", residual}};
        if (variational) {
            const bool bound = state.energy.total <= variational->energy.total;
            result["variational"] = {{"sigma", variational->sigma},
                                     {"e_total", variational->energy.total},
                                     {"stability", to_string(variational->stability)},
                                     {"gaussian_overlap", gaussian_overlap(state, variational->sigma)},
                                     {"upper_bound_holds", bound}};
        }
        if (gpe.profile) {
            std::ofstream out(*gpe.profile);
            if (!out)
                throw UsageError("--profile", "cannot write '" + *gpe.profile + "'");
            write_profile_csv(out, state);
        }
        if (gpe.history) {
            std::ofstream out(*gpe.history);
            if (!out)
                throw UsageError("--history", "cannot write '" + *gpe.history + "'");
            write_history_csv(out, state);
        }
        if (cfg.format == "csv") {
            emit_csv(cfg, [&](std::ostream& out) {
                out << "e_total,e_kin,e_trap,e_int,mu,virial_residual,e_variational,bound\n"
                    << csv_row({state.energy.total, state.energy.kinetic, state.energy.trap,
                                state.energy.interaction, state.mu, residual,
                                variational ? variational->energy.total : NAN})
                    << ','
                    << (variational && state.energy.total <= variational->energy.total ? "pass" : "fail")
                    << '\n';
            });
        } else {
            emit_json(cfg, result);
        }
        return exit_ok;
    } catch (const CollapseError& e) {
        nlohmann::json result = {{"collapse",
                                  {{"message", e.what()},
                                   {"rms_radius", e.rms_radius()},
                                   {"iteration", e.iteration()},
                                   {"coupling_bN", coupling},
                                   {"variational_critical_bN", -local::critical_point(-1.0).n_max}}}};
        emit_json(cfg, result);
        std::cerr << "gpvar gpe: " << e.what() << '\n';
        return exit_collapse;
    } catch (const ConvergenceError& e) {
        std::cerr << "gpvar gpe: " << e.what() << '\n';
        return exit_nonconvergence;
    }
}

int cmd_validate(const RunConfig& cfg, const ValidateOptions& opts) {
    ValidationOptions options;
    options.tolerance_override = cfg.tol;
    options.include_nonlocal_quadrature = !opts.skip_nonlocal_quadrature;
    options.seed = cfg.seed;
    const ValidationReport report = run_validation(options);
    if (cfg.format == "csv") {
        emit_csv(cfg, [&](std::ostream& out) {
            out << "section,at,closed_form,oracle,rel_error,tolerance,pass\n";
            for (const ValidationSection& s : report.sections)
                for (const ValidationPoint& p : s.points) {
                    std::string at = p.at.dump();
                    for (char& c : at)
                        if (c == ',')
                            c = ';';
                    out << s.name << ',' << at << ',' << format_double(p.closed_form) << ','
                        << format_double(p.oracle) << ',' << format_double(p.rel_error) << ','
                        << format_double(s.tolerance) << ',' << (p.pass ? "pass" : "fail") << '\n';
                }
            out << "# erfc argument resolved: " << nonlocal::to_string(report.resolved_variant)
                << '\n';
        });
    } else {
        emit_json(cfg, to_json(report));
    }
    return report.pass ? exit_ok : exit_oracle_mismatch;
}

} // namespace gpvar::cli
