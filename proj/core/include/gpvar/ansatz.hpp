#pragma once

#include "gpvar/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gpvar {

/// Isotropic Gaussian trial state psi(r) = pi^{-3/4} sigma^{-3/2} exp(-r^2/(2 sigma^2)).
class GaussianAnsatz {
public:
    explicit GaussianAnsatz(double sigma) : sigma_(sigma) {
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw DomainError("Gaussian width sigma must be positive and finite, got " +
                              std::to_string(sigma));
    }

    double sigma() const noexcept { return sigma_; }

    double psi(double r) const noexcept {
        const double norm = std::pow(std::numbers::pi, -0.75) * std::pow(sigma_, -1.5);
        return norm * std::exp(-0.5 * r * r / (sigma_ * sigma_));
    }

    /// d psi / dr
    double dpsi_dr(double r) const noexcept { return -r / (sigma_ * sigma_) * psi(r); }

    double density(double r) const noexcept {
        const double p = psi(r);
        return p * p;
    }

private:
    double sigma_;
};

/// Energy per particle split into its three contributions.
struct EnergyBreakdown {
    double kinetic = 0.0;
    double trap = 0.0;
    double interaction = 0.0;
    double total = 0.0;

    static EnergyBreakdown from_terms(double kinetic, double trap, double interaction) {
        return {kinetic, trap, interaction, kinetic + trap + interaction};
    }

    EnergyBreakdown scaled(double factor) const {
        return from_terms(kinetic * factor, trap * factor, interaction * factor);
    }
};

/// 2K - 2T + 3I, which vanishes at any stationary state in a harmonic trap.
inline double virial_sum(const EnergyBreakdown& e) {
    return 2.0 * e.kinetic - 2.0 * e.trap + 3.0 * e.interaction;
}

} // namespace gpvar
