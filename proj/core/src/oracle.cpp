#include "gpvar/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace gpvar::oracle {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

double cutoff(const QuadratureSpec& spec, double sigma) {
    return spec.outer_radius > 0.0 ? spec.outer_radius : 12.0 * sigma;
}

template <class F>
double radial_integral(F&& f, double sigma, const QuadratureSpec& spec) {
    return detail::integrate(std::forward<F>(f), 0.0, cutoff(spec, sigma), spec.rel_tol,
                             spec.abs_tol, spec.max_subdivisions)
        .value;
}

// r'^2 times the angular average of exp(-gamma s)/s over the direction of r',
// times 1/(4 pi): 2 pi r'/(gamma r) (exp(-gamma|r - r'|) - exp(-gamma(r + r'))),
// or 4 pi r'^2 / max(r, r') for the unscreened kernel.
double shell_weight(double r, double rp, double gamma) {
    if (gamma == 0.0)
        return four_pi * rp * rp / std::max(r, rp);
    const double near = std::min(r, rp);
    const double far_minus_near = std::abs(r - rp);
    // exp(-g|r-r'|) - exp(-g(r+r')) = -exp(-g|r-r'|) expm1(-2 g min(r, r'))
    const double difference = -std::exp(-gamma * far_minus_near) * std::expm1(-2.0 * gamma * near);
    return 2.0 * std::numbers::pi * rp / (gamma * r) * difference;
}

} // namespace

double quad_norm(double sigma, const QuadratureSpec& spec) {
    const GaussianAnsatz psi(sigma);
    return radial_integral([&](double r) { return four_pi * r * r * psi.density(r); }, sigma,
                           spec);
}

double quad_screened_pair(double a, double gamma, double sigma, const QuadratureSpec& spec) {
    const GaussianAnsatz psi(sigma);
    if (gamma < 0.0)
        throw DomainError("Gamma must be non-negative");
    if (a == 0.0)
        return 0.0;
    const double outer = cutoff(spec, sigma);
    auto inner = [&](double r) {
        auto integrand = [&](double rp) { return psi.density(rp) * shell_weight(r, rp, gamma); };
        const double below = detail::integrate(integrand, 0.0, r, spec.rel_tol, spec.abs_tol,
                                               spec.max_subdivisions)
                                 .value;
        const double above = detail::integrate(integrand, r, outer, spec.rel_tol, spec.abs_tol,
                                               spec.max_subdivisions)
                                 .value;
        return below + above;
    };
    const double pair = radial_integral(
        [&](double r) { return four_pi * r * r * psi.density(r) * inner(r); }, sigma, spec);
    return -a * pair;
}

EnergyBreakdown quad_energy(const InteractionKernel& kernel, double n, double sigma,
                            const QuadratureSpec& spec) {
    validate(kernel);
    if (!(n >= 0.0))
        throw DomainError("boson number N must be non-negative");
    const GaussianAnsatz psi(sigma);
    const Composite c = as_composite(kernel);

    const double kinetic = radial_integral(
        [&](double r) {
            const double d = psi.dpsi_dr(r);
            return four_pi * r * r * 0.5 * d * d;
        },
        sigma, spec);
    const double trap = radial_integral(
        [&](double r) { return four_pi * r * r * 0.5 * r * r * psi.density(r); }, sigma, spec);

    double interaction = 0.0;
    if (c.contact.b != 0.0) {
        const double quartic = radial_integral(
            [&](double r) {
                const double rho = psi.density(r);
                return four_pi * r * r * rho * rho;
            },
            sigma, spec);
        interaction += 0.5 * c.contact.b * n * quartic;
    }
    if (c.screened.a != 0.0)
        interaction += 0.5 * n * quad_screened_pair(c.screened.a, c.screened.gamma, sigma, spec);
    return EnergyBreakdown::from_terms(kinetic, trap, interaction);
}

Derivative fd_derivative(const std::function<double(double)>& f, double x, int order, double h0) {
    if (order != 1 && order != 2)
        throw DomainError("fd_derivative supports order 1 or 2");
    constexpr int table_size = 10;
    constexpr double shrink = 1.4;
    constexpr double shrink2 = shrink * shrink;
    double h = h0 > 0.0 ? h0 : (x != 0.0 ? 0.05 * std::abs(x) : 0.05);

    auto sample = [&](double at) {
        const double v = f(at);
        if (!std::isfinite(v))
            throw DomainError("non-finite function sample in finite difference at x = " +
                              std::to_string(at));
        return v;
    };
    const double center = order == 2 ? sample(x) : 0.0;
    auto difference = [&](double step) {
        if (order == 1)
            return (sample(x + step) - sample(x - step)) / (2.0 * step);
        return (sample(x + step) - 2.0 * center + sample(x - step)) / (step * step);
    };

    std::array<std::array<double, table_size>, table_size> a{};
    a[0][0] = difference(h);
    Derivative best{a[0][0], std::numeric_limits<double>::max()};
    for (int i = 1; i < table_size; ++i) {
        h /= shrink;
        a[0][i] = difference(h);
        double factor = shrink2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * factor - a[j - 1][i - 1]) / (factor - 1.0);
            factor *= shrink2;
            const double err =
                std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
            if (err <= best.error)
                best = {a[j][i], err};
        }
        // higher order made things worse: roundoff has taken over
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * best.error)
            break;
    }
    return best;
}

MonteCarloEstimate mc_pair_integral(const InteractionKernel& kernel, double sigma,
                                    std::int64_t samples, std::uint64_t seed) {
    validate(kernel);
    const Composite c = as_composite(kernel);
    if (std::holds_alternative<Contact>(kernel) || c.contact.b != 0.0)
        throw DomainError("a contact kernel cannot be sampled by Monte Carlo");
    if (samples < 10000)
        throw DomainError("mc_pair_integral needs at least 10^4 samples");
    const GaussianAnsatz psi(sigma);

    std::mt19937_64 rng(seed);
    // each Cartesian component of |psi|^2 has variance sigma^2/2
    std::normal_distribution<double> coordinate(0.0, psi.sigma() / std::numbers::sqrt2);
    const double a = c.screened.a;
    const double gamma = c.screened.gamma;

    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        double s2 = 0.0;
        for (int axis = 0; axis < 3; ++axis) {
            const double d = coordinate(rng) - coordinate(rng);
            s2 += d * d;
        }
        const double s = std::sqrt(s2);
        const double v = -a * std::exp(-gamma * s) / s;
        const double delta = v - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (v - mean);
    }
    const double variance = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(variance / static_cast<double>(samples))};
}

} // namespace gpvar::oracle
