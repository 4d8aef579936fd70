#pragma once

// Error function family. erf and erfc forward to <cmath>; erfcx is computed
// directly so that exp(x^2)*erfc(x) never overflows, to about 1e-15 relative.

namespace gpvar::specfun {

double erf(double x);

/// 1 - erf(x). NaN propagates.
double erfc(double x);

/// exp(x^2) * erfc(x) for x >= 0. Throws DomainError for negative x.
double erfcx(double x);

} // namespace gpvar::specfun
