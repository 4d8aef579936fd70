#include "gpvar/nonlocal_model.hpp"

#include "gpvar/errors.hpp"
#include "gpvar/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gpvar {

namespace {

constexpr double sqrt_2_over_pi = std::numbers::sqrt2 * std::numbers::inv_sqrtpi;
constexpr double sqrt_pi = 1.7724538509055160273;
constexpr double asymptotic_threshold = 8.0;

struct ScreenedShape {
    double g;  ///< 1 - sqrt(pi) x erfcx(x)
    double dg; ///< d g / d x
};

// g(x) = 1 - sqrt(pi) x erfcx(x) equals the screened pair average in units of
// its unscreened value. For large x the direct form cancels, so the
// asymptotic expansion g = sum_k (-1)^{k+1} (2k-1)!! / (2x^2)^k is used.
ScreenedShape screened_shape(double x) {
    if (x < asymptotic_threshold) {
        const double e = specfun::erfcx(x);
        return {1.0 - sqrt_pi * x * e, 2.0 * x - sqrt_pi * (1.0 + 2.0 * x * x) * e};
    }
    const double inv = 1.0 / (2.0 * x * x);
    double coef = 1.0; // (2k-1)!! (2x^2)^{-k}
    double g = 0.0;
    double dg = 0.0;
    double sign = 1.0;
    for (int k = 1; k < 60; ++k) {
        coef *= (2.0 * k - 1.0) * inv;
        g += sign * coef;
        dg += sign * coef * (-2.0 * k / x);
        if (coef < 1e-18 * std::abs(g))
            break;
        sign = -sign;
    }
    return {g, dg};
}

double screened_derivative_per_n(const NonlocalModel& m, double sigma) {
    return -0.5 * m.a * nonlocal::screened_pair_average_dsigma(sigma, m.gamma);
}

} // namespace

NonlocalModel::NonlocalModel(double b_, double a_, double gamma_, double n_)
    : b(b_), a(a_), gamma(gamma_), n(n_) {
    if (!std::isfinite(b))
        throw DomainError("contact strength b must be finite");
    if (!(a >= 0.0) || !std::isfinite(a))
        throw DomainError("screened amplitude A must be non-negative, got " + std::to_string(a));
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw DomainError("inverse screening length Gamma must be non-negative, got " +
                          std::to_string(gamma));
    if (!(n >= 0.0) || !std::isfinite(n))
        throw DomainError("boson number N must be non-negative, got " + std::to_string(n));
}

NonlocalModel NonlocalModel::from_kernel(const InteractionKernel& reduced, double n) {
    validate(reduced);
    const Composite c = as_composite(reduced);
    return NonlocalModel(c.contact.b, c.screened.a, c.screened.gamma, n);
}

EnergyBreakdown energy(const NonlocalModel& model, const GaussianAnsatz& ansatz) {
    const EnergyBreakdown contact = energy(model.contact_part(), ansatz);
    if (model.a == 0.0)
        return contact;
    const double screened =
        -0.5 * model.a * model.n * nonlocal::screened_pair_average(ansatz.sigma(), model.gamma);
    return EnergyBreakdown::from_terms(contact.kinetic, contact.trap,
                                       contact.interaction + screened);
}

double denergy_dsigma(const NonlocalModel& model, const GaussianAnsatz& ansatz) {
    const double contact = denergy_dsigma(model.contact_part(), ansatz);
    if (model.a == 0.0)
        return contact;
    return contact + model.n * screened_derivative_per_n(model, ansatz.sigma());
}

namespace nonlocal {

double screened_pair_average(double sigma, double gamma) {
    const double x = sigma * gamma / std::numbers::sqrt2;
    return sqrt_2_over_pi / sigma * screened_shape(x).g;
}

double screened_pair_average_dsigma(double sigma, double gamma) {
    const double x = sigma * gamma / std::numbers::sqrt2;
    const ScreenedShape s = screened_shape(x);
    return sqrt_2_over_pi * (-s.g / (sigma * sigma) + gamma / (std::numbers::sqrt2 * sigma) * s.dg);
}

const char* to_string(ErfcArgument variant) {
    switch (variant) {
    case ErfcArgument::sigma_gamma_over_sqrt2:
        return "sigma*Gamma/sqrt(2)";
    case ErfcArgument::sigma_gamma_times_sqrt2:
        return "sigma*Gamma*sqrt(2)";
    }
    return "?";
}

double closed_form_denominator(const NonlocalModel& p, double sigma, ErfcArgument variant) {
    const double s = GaussianAnsatz(sigma).sigma();
    const double g = p.gamma;
    const double sg = s * g;
    // exp(s^2 g^2 / 2) * erfc(arg), never formed from its overflowing factors
    double scaled_erfc = 0.0;
    if (variant == ErfcArgument::sigma_gamma_over_sqrt2) {
        scaled_erfc = specfun::erfcx(sg / std::numbers::sqrt2);
    } else {
        scaled_erfc = specfun::erfcx(std::numbers::sqrt2 * sg) * std::exp(-1.5 * sg * sg);
    }
    const double s3 = s * s * s;
    return p.b / (2.0 * two_pi_three_halves * s) +
           p.a * g * g * s3 / (3.0 * std::sqrt(2.0 * std::numbers::pi)) -
           p.a / 6.0 * sqrt_2_over_pi * s - p.a * g * g * g / 6.0 * s3 * s * scaled_erfc;
}

std::optional<double> n_of_sigma_closed_form(const NonlocalModel& p, double sigma,
                                             ErfcArgument variant) {
    const double s = GaussianAnsatz(sigma).sigma();
    const double denominator = closed_form_denominator(p, s, variant);
    const double numerator = 0.5 * (s * s * s * s - 1.0);
    if (denominator == 0.0)
        return std::nullopt;
    const double n = numerator / denominator;
    if (!std::isfinite(n))
        return std::nullopt;
    return n;
}

std::optional<double> n_of_sigma_oracle(const NonlocalModel& p, double sigma) {
    const GaussianAnsatz ansatz(sigma);
    // dE/dsigma = single_particle + N * per_particle_pair
    const double single_particle = denergy_dsigma(LocalModel(0.0, 0.0), ansatz);
    const double s4 = std::pow(ansatz.sigma(), 4);
    const double per_particle_pair = -1.5 * p.b / (two_pi_three_halves * s4) +
                                     screened_derivative_per_n(p, ansatz.sigma());
    if (per_particle_pair == 0.0)
        return std::nullopt;
    const double n = -single_particle / per_particle_pair;
    if (!std::isfinite(n))
        return std::nullopt;
    return n;
}

} // namespace nonlocal

} // namespace gpvar
