#include "gpvar/local_model.hpp"

#include "gpvar/errors.hpp"

#include <cmath>
#include <string>

namespace gpvar {

LocalModel::LocalModel(double b_, double n_) : b(b_), n(n_) {
    if (!std::isfinite(b))
        throw DomainError("contact strength b must be finite");
    if (!(n >= 0.0) || !std::isfinite(n))
        throw DomainError("boson number N must be non-negative, got " + std::to_string(n));
}

EnergyBreakdown energy(const LocalModel& model, const GaussianAnsatz& ansatz) {
    const double s = ansatz.sigma();
    const double s2 = s * s;
    return EnergyBreakdown::from_terms(0.75 / s2, 0.75 * s2,
                                       model.b * model.n / (2.0 * two_pi_three_halves * s2 * s));
}

double denergy_dsigma(const LocalModel& model, const GaussianAnsatz& ansatz) {
    const double s = ansatz.sigma();
    const double s3 = s * s * s;
    return -1.5 / s3 + 1.5 * s - 1.5 * model.b * model.n / (two_pi_three_halves * s3 * s);
}

namespace local {

double n_of_sigma(double b, double sigma) {
    if (b == 0.0)
        throw DomainError("N(sigma) is undefined for b = 0: the stationary width is 1 for every N");
    const double s = GaussianAnsatz(sigma).sigma();
    const double s4 = s * s * s * s;
    return two_pi_three_halves / b * s * (s4 - 1.0);
}

double dn_dsigma(double b, double sigma) {
    if (b == 0.0)
        throw DomainError("N(sigma) is undefined for b = 0");
    const double s = GaussianAnsatz(sigma).sigma();
    return two_pi_three_halves / b * (5.0 * s * s * s * s - 1.0);
}

CriticalPoint critical_point(double b) {
    if (!(b < 0.0))
        throw DomainError("no collapse threshold for repulsive or vanishing contact strength (b = " +
                          std::to_string(b) + ")");
    CriticalPoint cp;
    cp.sigma_min = std::pow(5.0, -0.25);
    cp.n_max = 4.0 * std::pow(5.0, -1.25) * two_pi_three_halves / -b;
    return cp;
}

} // namespace local

} // namespace gpvar
