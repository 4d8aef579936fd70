#include "gpvar/specfun.hpp"

#include "gpvar/errors.hpp"

#include <cmath>
#include <numbers>

namespace gpvar::specfun {

namespace {

constexpr double cf_limit = 10.0;

// exp(x^2) with the rounding error of x*x folded back in.
double exp_square(double x) {
    const double x2 = x * x;
    const double x2_err = std::fma(x, x, -x2);
    return std::exp(x2) * std::exp(x2_err);
}

// erfcx for x >= 10 via the Laplace continued fraction
//   sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz method.
double erfcx_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 4e-16;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 5000; ++k) {
        const double ak = 0.5 * k;
        d = x + ak * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = x + ak / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < eps)
            break;
    }
    return std::numbers::inv_sqrtpi / f;
}

} // namespace

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
    if (std::isnan(x))
        return x;
    if (x < 0.0)
        throw DomainError("erfcx is defined here for non-negative arguments only");
    if (x < cf_limit)
        return std::erfc(x) * exp_square(x);
    if (x > 1e8)
        return std::numbers::inv_sqrtpi / x; // next correction is below 1e-16 relative
    return erfcx_continued_fraction(x);
}

} // namespace gpvar::specfun
