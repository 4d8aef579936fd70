#pragma once

// Imaginary-time relaxation of the stationary Gross-Pitaevskii equation
//
//   [-1/2 lap + r^2/2 + g |psi|^2] psi = mu psi,   g = b N,
//
// for a spherically symmetric state in oscillator units. The unknown is
// u(r) = r psi(r) on the nodes r_j = j h, j = 0..points, with u(0) = 0 and
// u(r_max) = 0, and a second-order centered Laplacian.

#include "gpvar/ansatz.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace gpvar {

struct RadialGrid {
    double r_max = 12.0;
    int points = 65536; ///< number of intervals; nodes are 0..points

    double spacing() const { return r_max / points; }
    double node(int j) const { return j * spacing(); }
    void validate() const;
};

enum class Stepper {
    explicit_euler, ///< stable for dtau below about h^2
    semi_implicit,  ///< backward Euler in the linear part, nonlinearity lagged
};

struct RelaxConfig {
    Stepper stepper = Stepper::semi_implicit;
    double dtau = 0.0; ///< 0 selects 0.1 (semi-implicit) or 0.4 h^2 (explicit)
    int max_iters = 100000;
    double energy_tol = 1e-14;
    double residual_tol = 1e-7; ///< on || H psi - mu psi ||, checked once the energy settles
    double initial_sigma = 0.0; ///< 0 selects the variational width of the local basin
    bool record_history = true;
};

struct IterationRecord {
    int iteration;
    double energy;
    double residual; ///< || H psi - mu psi ||
};

struct RadialState {
    RadialGrid grid;
    std::vector<double> u; ///< r psi(r) at the nodes; 4 pi sum h u^2 = 1
    double norm = 0.0;     ///< 4 pi integral |psi|^2 r^2 dr
    EnergyBreakdown energy;
    double mu = 0.0;
    double rms_radius = 0.0;
    int iterations = 0;
    std::vector<IterationRecord> history;
};

/// Owns one relaxation's mutable grid state.
class RadialSolver {
public:
    RadialSolver(double coupling, RadialGrid grid, RelaxConfig config = {});

    void set_gaussian(double sigma);
    /// Arbitrary start; `u` holds r psi(r) at all nodes and is renormalized.
    void set_profile(std::span<const double> u);

    /// One imaginary-time step followed by renormalization. Returns the energy.
    double step();

    /// Iterates until the energy change drops below the tolerance.
    /// Throws CollapseError or ConvergenceError.
    RadialState run();

    RadialState state() const;
    double coupling() const { return coupling_; }
    double dtau() const { return dtau_; }

private:
    EnergyBreakdown measure() const;
    double residual(double mu) const;
    double rms_radius() const;
    void normalize();
    void check_collapse(int iteration) const;

    double coupling_;
    RadialGrid grid_;
    RelaxConfig config_;
    double dtau_;
    std::vector<double> phi_; ///< sqrt(4 pi) u, unit norm under the trapezoid rule
    std::vector<IterationRecord> history_;
    int iterations_ = 0;
    // scratch for the tridiagonal solve
    std::vector<double> diag_, rhs_;
};

/// Runs RadialSolver from the configured initial Gaussian.
RadialState relax(double coupling, const RadialGrid& grid = {}, const RelaxConfig& config = {});

/// |2K - 2T + 3I| / |E|.
double virial_residual(const RadialState& state);

/// Overlap of the state with the normalized Gaussian of width sigma.
double gaussian_overlap(const RadialState& state, double sigma);

/// Width of the variational Gaussian used as the default starting point.
double default_initial_sigma(double coupling);

void write_profile_csv(std::ostream& out, const RadialState& state);
void write_history_csv(std::ostream& out, const RadialState& state);

} // namespace gpvar
