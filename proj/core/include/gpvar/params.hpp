#pragma once

// Physical parameters of the trapped gas, the interaction kernel, and the
// reduction to oscillator units (hbar = m = omega = 1).

#include <utility>
#include <variant>

namespace gpvar {

/// Trap and gas constants. Either SI or already-dimensionless values.
struct TrapGasParams {
    double mass = 1.0;
    double trap_frequency = 1.0;
    double hbar = 1.0;
    double scattering_length = 0.0; ///< signed; negative means attractive

    /// Throws DomainError unless mass, trap_frequency and hbar are positive
    /// and finite.
    void validate() const;
};

/// Delta-function pseudo-potential B*delta(r - r').
struct Contact {
    double b = 0.0;
};

/// Screened attraction -A*exp(-Gamma*s)/s. Positive `a` is attractive.
struct Screened {
    double a = 0.0;
    double gamma = 0.0;
};

struct Composite {
    Contact contact;
    Screened screened;
};

using InteractionKernel = std::variant<Contact, Screened, Composite>;

/// Throws DomainError on non-finite entries or a negative screening constant.
void validate(const InteractionKernel& kernel);

/// Contact strength and screened parameters of any kernel, zero where absent.
Composite as_composite(const InteractionKernel& kernel);

/// Units in which the reduced problem is expressed.
struct DimensionlessScale {
    double length_unit = 1.0;  ///< a_ho = sqrt(hbar/(m*omega))
    double energy_unit = 1.0;  ///< hbar*omega
    double contact_unit = 1.0; ///< hbar*omega*a_ho^3
};

DimensionlessScale make_scale(const TrapGasParams& params);

/// B = 4*pi*hbar^2*a_s/m.
double contact_strength_from_scattering(const TrapGasParams& params);

/// Reduces the kernel to oscillator units:
/// b -> B/(hbar*omega*a_ho^3), a -> A/(hbar*omega*a_ho), gamma -> Gamma*a_ho.
std::pair<DimensionlessScale, InteractionKernel> to_dimensionless(const TrapGasParams& params,
                                                                  const InteractionKernel& kernel);

/// Inverse of the kernel part of to_dimensionless.
InteractionKernel to_physical(const DimensionlessScale& scale, const InteractionKernel& reduced);

} // namespace gpvar
