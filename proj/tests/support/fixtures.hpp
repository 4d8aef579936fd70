#pragma once

#include "gpvar/nonlocal_model.hpp"

namespace gpvar::test {

// Composite-kernel parameters with three stationary widths in the default
// window [1e-3, 10]: a high-density minimum, a barrier, and a low-density
// minimum. Found by scanning A and Gamma at b = -0.01, N = 1.
inline constexpr double witness_b = -0.01;
inline constexpr double witness_a = 50.0;
inline constexpr double witness_gamma = 8.0;
inline constexpr double witness_n = 1.0;

inline NonlocalModel witness_model() { return {witness_b, witness_a, witness_gamma, witness_n}; }

// Stationary widths of the witness, refined by Brent and confirmed against
// an independent 40-digit evaluation of N(sigma) (agreement to 1e-13).
inline constexpr double witness_sigma_high_density = 0.1032227366407299;
inline constexpr double witness_sigma_barrier = 0.5708904857963598;
inline constexpr double witness_sigma_low_density = 0.665879561283122;

// Energies per particle at those widths, 40-digit quadrature of the pair
// distribution.
inline constexpr double witness_e_high_density = -8.1195965508266381;
inline constexpr double witness_e_barrier = 1.065799036522679;
inline constexpr double witness_e_low_density = 1.062993197251567;

} // namespace gpvar::test
