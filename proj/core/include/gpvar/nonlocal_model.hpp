#pragma once

// Gaussian variational energetics for the composite kernel
//
//   V(s) = B delta(s) - A exp(-Gamma s)/s
//
// in oscillator units. For the Gaussian trial state the relative coordinate
// is Gaussian with variance sigma^2 per axis, which gives the screened pair
// average
//
//   <exp(-Gamma s)/s> = sqrt(2/pi)/sigma - Gamma * erfcx(sigma Gamma / sqrt 2).

#include "gpvar/ansatz.hpp"
#include "gpvar/local_model.hpp"
#include "gpvar/params.hpp"

#include <optional>

namespace gpvar {

struct NonlocalModel {
    double b = 0.0;     ///< reduced contact strength
    double a = 0.0;     ///< reduced screened amplitude, >= 0
    double gamma = 0.0; ///< reduced inverse screening length, >= 0
    double n = 0.0;     ///< boson number

    NonlocalModel() = default;
    NonlocalModel(double b_, double a_, double gamma_, double n_);

    static NonlocalModel from_kernel(const InteractionKernel& reduced, double n);
    LocalModel contact_part() const { return {b, n}; }
};

EnergyBreakdown energy(const NonlocalModel& model, const GaussianAnsatz& ansatz);

double denergy_dsigma(const NonlocalModel& model, const GaussianAnsatz& ansatz);

namespace nonlocal {

/// <exp(-gamma s)/s> over the pair distribution of the Gaussian of width sigma.
double screened_pair_average(double sigma, double gamma);

/// d/dsigma of screened_pair_average.
double screened_pair_average_dsigma(double sigma, double gamma);

/// How the exp(sigma^2 Gamma^2/2) erfc(.) factor of the closed-form N(sigma)
/// is evaluated. The Gaussian-Yukawa integral yields erfc(sigma Gamma / sqrt 2);
/// erfc(sigma Gamma sqrt 2) is a commonly quoted alternative kept for comparison.
enum class ErfcArgument {
    sigma_gamma_over_sqrt2,
    sigma_gamma_times_sqrt2,
};

const char* to_string(ErfcArgument variant);

/// The variant that agrees with the stationarity oracle.
inline constexpr ErfcArgument default_erfc_argument = ErfcArgument::sigma_gamma_over_sqrt2;

/// Closed-form N(sigma):
///
///   N = (sigma^4/2 - 1/2) / ( b/(2 (2pi)^{3/2} sigma) + a Gamma^2 sigma^3 / (3 sqrt(2pi))
///        - (a/6) sqrt(2/pi) sigma - (a Gamma^3/6) sigma^4 exp(sigma^2 Gamma^2/2) erfc(arg) )
///
/// Returns nullopt at a pole (vanishing denominator).
std::optional<double> n_of_sigma_closed_form(const NonlocalModel& params, double sigma,
                                             ErfcArgument variant = default_erfc_argument);

/// The denominator of n_of_sigma_closed_form; its sign changes mark poles.
double closed_form_denominator(const NonlocalModel& params, double sigma,
                               ErfcArgument variant = default_erfc_argument);

/// N(sigma) from dE/dsigma = 0, where dE/dsigma is affine in N. Authoritative
/// reference for the closed form. Returns nullopt where the N coefficient
/// vanishes.
std::optional<double> n_of_sigma_oracle(const NonlocalModel& params, double sigma);

} // namespace nonlocal

} // namespace gpvar
