#pragma once

// Gaussian variational energetics for a contact interaction, in oscillator
// units. The energy per particle is
//
//   e(sigma) = 3/(4 sigma^2) + 3 sigma^2/4 + b N / (2 (2 pi)^{3/2} sigma^3).

#include "gpvar/ansatz.hpp"

#include <numbers>
#include <optional>

namespace gpvar {

inline constexpr double two_pi_three_halves = 15.749609945722419; // (2 pi)^{3/2}

struct LocalModel {
    double b = 0.0; ///< reduced contact strength
    double n = 0.0; ///< boson number, real-valued

    LocalModel() = default;
    LocalModel(double b_, double n_);
};

struct CriticalPoint {
    double sigma_min = 0.0;
    double n_max = 0.0;
};

EnergyBreakdown energy(const LocalModel& model, const GaussianAnsatz& ansatz);

double denergy_dsigma(const LocalModel& model, const GaussianAnsatz& ansatz);

namespace local {

/// Boson number at which sigma is stationary: ((2 pi)^{3/2}/b)(sigma^5 - sigma).
/// Negative values mean no stationary point with this sigma at positive N.
/// Throws DomainError for b == 0 or sigma <= 0.
double n_of_sigma(double b, double sigma);

/// dN/dsigma of n_of_sigma.
double dn_dsigma(double b, double sigma);

/// Collapse threshold of the attractive gas: sigma_min = 5^{-1/4},
/// n_max = 4 * 5^{-5/4} (2 pi)^{3/2} / |b|. Throws DomainError for b >= 0.
CriticalPoint critical_point(double b);

/// Stationary width for b == 0 (the noninteracting oscillator).
inline constexpr double noninteracting_sigma = 1.0;

} // namespace local

} // namespace gpvar
