#include "gpvar/gpe_radial.hpp"

#include "gpvar/errors.hpp"
#include "gpvar/format.hpp"
#include "gpvar/local_model.hpp"
#include "gpvar/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

namespace gpvar {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;
const double sqrt_four_pi = std::sqrt(four_pi);

} // namespace

void RadialGrid::validate() const {
    if (points < 64)
        throw DomainError("radial grid needs at least 64 points, got " + std::to_string(points));
    if (!(r_max > 0.0) || !std::isfinite(r_max))
        throw DomainError("radial grid r_max must be positive");
}

double default_initial_sigma(double coupling) {
    const std::vector<StationaryPoint> points =
        find_branches(LocalModel(coupling, 1.0), 1.0, SigmaWindow{1e-3, 10.0});
    // the widest minimum is the ordinary condensate, stable or metastable
    for (auto it = points.rbegin(); it != points.rend(); ++it)
        if (it->kind == PointKind::minimum)
            return it->sigma;
    return coupling < 0.0 ? std::pow(5.0, -0.25) : local::noninteracting_sigma;
}

RadialSolver::RadialSolver(double coupling, RadialGrid grid, RelaxConfig config)
    : coupling_(coupling), grid_(grid), config_(config) {
    grid_.validate();
    if (!std::isfinite(coupling_))
        throw DomainError("coupling bN must be finite");
    if (config_.max_iters < 1)
        throw DomainError("max_iters must be positive");
    const double h = grid_.spacing();
    dtau_ = config_.dtau > 0.0 ? config_.dtau
                               : (config_.stepper == Stepper::semi_implicit ? 0.1 : 0.4 * h * h);
    phi_.assign(static_cast<std::size_t>(grid_.points) + 1, 0.0);
    diag_.resize(phi_.size());
    rhs_.resize(phi_.size());
    set_gaussian(config_.initial_sigma > 0.0 ? config_.initial_sigma
                                             : default_initial_sigma(coupling_));
}

void RadialSolver::set_gaussian(double sigma) {
    const GaussianAnsatz gauss(sigma);
    for (int j = 0; j <= grid_.points; ++j) {
        const double r = grid_.node(j);
        phi_[j] = sqrt_four_pi * r * gauss.psi(r);
    }
    phi_.back() = 0.0;
    normalize();
    history_.clear();
    iterations_ = 0;
}

void RadialSolver::set_profile(std::span<const double> u) {
    if (u.size() != phi_.size())
        throw DomainError("profile size does not match the grid");
    for (std::size_t j = 0; j < phi_.size(); ++j)
        phi_[j] = sqrt_four_pi * u[j];
    phi_.front() = 0.0;
    phi_.back() = 0.0;
    normalize();
    history_.clear();
    iterations_ = 0;
}

void RadialSolver::normalize() {
    double sum = 0.0;
    for (double p : phi_)
        sum += p * p;
    const double scale = 1.0 / std::sqrt(sum * grid_.spacing());
    for (double& p : phi_)
        p *= scale;
}

EnergyBreakdown RadialSolver::measure() const {
    const double h = grid_.spacing();
    const int m = grid_.points;
    double kinetic = 0.0;
    double trap = 0.0;
    double quartic = 0.0;
    for (int j = 0; j < m; ++j) {
        const double d = phi_[j + 1] - phi_[j];
        kinetic += d * d;
    }
    for (int j = 1; j < m; ++j) {
        const double r = grid_.node(j);
        const double p2 = phi_[j] * phi_[j];
        trap += r * r * p2;
        quartic += p2 * p2 / (r * r);
    }
    return EnergyBreakdown::from_terms(0.5 * kinetic / h, 0.5 * h * trap,
                                       0.5 * coupling_ * h * quartic / four_pi);
}

double RadialSolver::residual(double mu) const {
    const double h = grid_.spacing();
    double sum = 0.0;
    for (int j = 1; j < grid_.points; ++j) {
        const double r = grid_.node(j);
        const double lap = (phi_[j + 1] - 2.0 * phi_[j] + phi_[j - 1]) / (h * h);
        const double potential = 0.5 * r * r + coupling_ * phi_[j] * phi_[j] / (four_pi * r * r);
        const double hphi = -0.5 * lap + potential * phi_[j];
        const double diff = hphi - mu * phi_[j];
        sum += diff * diff;
    }
    return std::sqrt(h * sum);
}

double RadialSolver::rms_radius() const {
    const double h = grid_.spacing();
    double sum = 0.0;
    for (int j = 1; j < grid_.points; ++j) {
        const double r = grid_.node(j);
        sum += r * r * phi_[j] * phi_[j];
    }
    return std::sqrt(h * sum);
}

void RadialSolver::check_collapse(int iteration) const {
    const double rms = rms_radius();
    // Gaussian-equivalent width: <r^2> = 3 sigma^2 / 2
    const double sigma_estimate = std::sqrt(2.0 / 3.0) * rms;
    if (!std::isfinite(rms) || sigma_estimate < 2.0 * grid_.spacing())
        throw CollapseError("condensate collapsed: width estimate " + format_double(sigma_estimate) +
                                " fell below two grid spacings at iteration " +
                                std::to_string(iteration),
                            rms, iteration);
}

double RadialSolver::step() {
    const double h = grid_.spacing();
    const int m = grid_.points;
    if (config_.stepper == Stepper::explicit_euler) {
        const EnergyBreakdown e = measure();
        const double mu = e.total + e.interaction;
        std::vector<double>& next = rhs_;
        next.front() = 0.0;
        next.back() = 0.0;
        for (int j = 1; j < m; ++j) {
            const double r = grid_.node(j);
            const double lap = (phi_[j + 1] - 2.0 * phi_[j] + phi_[j - 1]) / (h * h);
            const double potential = 0.5 * r * r + coupling_ * phi_[j] * phi_[j] / (four_pi * r * r);
            next[j] = phi_[j] - dtau_ * (-0.5 * lap + potential * phi_[j] - mu * phi_[j]);
        }
        phi_.swap(next);
    } else {
        // (1 + dtau H[phi_old]) phi_new = phi_old, tridiagonal in j = 1..m-1
        double deepest = 0.0;
        for (int j = 1; j < m; ++j) {
            const double r = grid_.node(j);
            const double potential = 0.5 * r * r + coupling_ * phi_[j] * phi_[j] / (four_pi * r * r);
            diag_[j] = potential;
            deepest = std::min(deepest, potential);
        }
        // keep the matrix diagonally dominant when the attractive well deepens
        const double dtau = 1.0 + dtau_ * deepest < 0.5 ? -0.5 / deepest : dtau_;
        const double off = -0.5 * dtau / (h * h);
        for (int j = 1; j < m; ++j) {
            diag_[j] = 1.0 + dtau * (1.0 / (h * h) + diag_[j]);
            rhs_[j] = phi_[j];
        }
        // Thomas algorithm
        for (int j = 2; j < m; ++j) {
            const double w = off / diag_[j - 1];
            diag_[j] -= w * off;
            rhs_[j] -= w * rhs_[j - 1];
        }
        phi_[m - 1] = rhs_[m - 1] / diag_[m - 1];
        for (int j = m - 2; j >= 1; --j)
            phi_[j] = (rhs_[j] - off * phi_[j + 1]) / diag_[j];
        phi_.front() = 0.0;
        phi_.back() = 0.0;
    }
    normalize();
    ++iterations_;
    const EnergyBreakdown e = measure();
    if (config_.record_history)
        history_.push_back({iterations_, e.total, residual(e.total + e.interaction)});
    return e.total;
}

RadialState RadialSolver::run() {
    double previous = measure().total;
    for (int iter = 1; iter <= config_.max_iters; ++iter) {
        const double current = step();
        if (coupling_ < 0.0 || !std::isfinite(current))
            check_collapse(iterations_);
        if (!std::isfinite(current))
            throw ConvergenceError("relaxation produced a non-finite energy");
        if (std::abs(current - previous) < config_.energy_tol) {
            const EnergyBreakdown e = measure();
            if (residual(e.total + e.interaction) < config_.residual_tol)
                return state();
        }
        previous = current;
    }
    throw ConvergenceError("relaxation did not converge within " +
                           std::to_string(config_.max_iters) + " iterations");
}

RadialState RadialSolver::state() const {
    RadialState s;
    s.grid = grid_;
    s.u.resize(phi_.size());
    for (std::size_t j = 0; j < phi_.size(); ++j)
        s.u[j] = phi_[j] / sqrt_four_pi;
    double sum = 0.0;
    for (double p : phi_)
        sum += p * p;
    s.norm = sum * grid_.spacing();
    s.energy = measure();
    s.mu = s.energy.total + s.energy.interaction;
    s.rms_radius = rms_radius();
    s.iterations = iterations_;
    s.history = history_;
    return s;
}

RadialState relax(double coupling, const RadialGrid& grid, const RelaxConfig& config) {
    RadialSolver solver(coupling, grid, config);
    return solver.run();
}

double virial_residual(const RadialState& state) {
    return std::abs(virial_sum(state.energy)) / std::abs(state.energy.total);
}

double gaussian_overlap(const RadialState& state, double sigma) {
    const GaussianAnsatz gauss(sigma);
    double cross = 0.0;
    double self = 0.0;
    double own = 0.0;
    for (int j = 1; j < state.grid.points; ++j) {
        const double r = state.grid.node(j);
        const double g = r * gauss.psi(r);
        cross += g * state.u[j];
        self += g * g;
        own += state.u[j] * state.u[j];
    }
    return cross / std::sqrt(self * own);
}

void write_profile_csv(std::ostream& out, const RadialState& state) {
    out << "r,psi,u\n";
    const double h = state.grid.spacing();
    for (int j = 0; j <= state.grid.points; ++j) {
        const double r = state.grid.node(j);
        // psi(0) = u'(0), from the second-order one-sided difference
        const double psi = j == 0 ? (4.0 * state.u[1] - state.u[2]) / (2.0 * h) : state.u[j] / r;
        out << format_double(r) << ',' << format_double(psi) << ',' << format_double(state.u[j])
            << '\n';
    }
}

void write_history_csv(std::ostream& out, const RadialState& state) {
    out << "iter,energy,residual\n";
    for (const IterationRecord& rec : state.history)
        out << rec.iteration << ',' << format_double(rec.energy) << ','
            << format_double(rec.residual) << '\n';
}

} // namespace gpvar
