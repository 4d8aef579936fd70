#pragma once

// One-dimensional machinery shared by both variational models: bracketing
// root finder, extremum finder, stationary-point isolation and
// classification, and tabulation of N(sigma) curves.

#include "gpvar/ansatz.hpp"
#include "gpvar/local_model.hpp"
#include "gpvar/nonlocal_model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gpvar {

using Model = std::variant<LocalModel, NonlocalModel>;

EnergyBreakdown energy(const Model& model, double sigma);
double denergy_dsigma(const Model& model, double sigma);

/// d^2E/dsigma^2 by Richardson-extrapolated central differences of the
/// analytic first derivative, initial step 1e-4 sigma.
double d2energy_dsigma2(const Model& model, double sigma);

/// N at which sigma is stationary; nullopt where undefined (pole or b = a = 0).
std::optional<double> stationary_n(const Model& model, double sigma);

double boson_number(const Model& model);
Model with_n(const Model& model, double n);
double contact_coupling(const Model& model);
std::string describe(const Model& model);

struct SigmaWindow {
    double lo = 1e-3;
    double hi = 10.0;

    void validate() const;
};

/// Brent's method on a bracket with a sign change. Converges when the
/// bracket is narrower than tol*max(1, |root|) or f hits zero exactly.
/// Throws BracketError when f(lo) and f(hi) share a sign.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12, int max_iter = 300);

struct Extremum {
    double x;
    double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
Extremum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                            double tol = 1e-10);

enum class PointKind { minimum, maximum, degenerate };
enum class Stability { stable, metastable, unstable };
enum class BranchLabel { primary, high_density, low_density, barrier };

const char* to_string(PointKind kind);
const char* to_string(Stability stability);
const char* to_string(BranchLabel label);

struct StationaryPoint {
    double sigma = 0.0;
    double n = 0.0;
    EnergyBreakdown energy;
    double curvature = 0.0; ///< d^2E/dsigma^2
    PointKind kind = PointKind::degenerate;
    Stability stability = Stability::unstable;
    BranchLabel label = BranchLabel::primary;
};

struct BranchOptions {
    int scan_points = 2000;
    bool log_grid = false;
    double root_tol = 1e-12;
    double degenerate_curvature = 1e-8;
    /// |dE/dsigma| * sigma^3 below which a tangency counts as a double root
    double tangency_tol = 1e-9;
};

/// All stationary points of E(sigma) at N = n_target inside the window,
/// ordered by sigma. Every model evaluation stays inside the window.
std::vector<StationaryPoint> find_branches(const Model& params, double n_target,
                                           SigmaWindow window = {}, const BranchOptions& options = {});

struct CurvePoint {
    double sigma = 0.0;
    double n = 0.0;
    EnergyBreakdown energy;
    PointKind kind = PointKind::degenerate;
};

struct BranchCurve {
    std::vector<CurvePoint> points; ///< sigma strictly increasing; poles leave gaps
    std::string model;
};

/// Tabulates the stationary N(sigma) with the energy and classification of
/// each stationary state. Rows where N is undefined or negative are omitted.
BranchCurve sweep(const Model& model, double sigma_lo, double sigma_hi, int steps,
                  bool log_grid = false);

/// Maximum of N(sigma) over the window for an attractive contact coupling.
/// Throws DomainError for b >= 0 or when N(sigma) has a pole in the window.
CriticalPoint critical_scan(const Model& model, SigmaWindow window = {}, int scan_points = 4000);

} // namespace gpvar
