#include "gpvar/params.hpp"

#include "gpvar/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gpvar {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(value));
}

void require_finite(double value, const char* name) {
    if (!std::isfinite(value))
        throw DomainError(std::string(name) + " must be finite");
}

} // namespace

void TrapGasParams::validate() const {
    require_positive(mass, "mass");
    require_positive(trap_frequency, "trap_frequency");
    require_positive(hbar, "hbar");
    require_finite(scattering_length, "scattering_length");
}

void validate(const InteractionKernel& kernel) {
    const Composite c = as_composite(kernel);
    require_finite(c.contact.b, "B");
    require_finite(c.screened.a, "A");
    require_finite(c.screened.gamma, "Gamma");
    if (c.screened.gamma < 0.0)
        throw DomainError("Gamma must be non-negative");
}

Composite as_composite(const InteractionKernel& kernel) {
    struct Visitor {
        Composite operator()(const Contact& c) const { return {c, Screened{}}; }
        Composite operator()(const Screened& s) const { return {Contact{}, s}; }
        Composite operator()(const Composite& c) const { return c; }
    };
    return std::visit(Visitor{}, kernel);
}

DimensionlessScale make_scale(const TrapGasParams& params) {
    params.validate();
    DimensionlessScale scale;
    scale.length_unit = std::sqrt(params.hbar / (params.mass * params.trap_frequency));
    scale.energy_unit = params.hbar * params.trap_frequency;
    scale.contact_unit = scale.energy_unit * std::pow(scale.length_unit, 3);
    return scale;
}

double contact_strength_from_scattering(const TrapGasParams& params) {
    params.validate();
    return 4.0 * std::numbers::pi * params.hbar * params.hbar * params.scattering_length /
           params.mass;
}

namespace {

// Multiplies b by fb, a by fa and gamma by fg, keeping the variant tag.
InteractionKernel rescale(const InteractionKernel& kernel, double fb, double fa, double fg) {
    struct Visitor {
        double fb, fa, fg;
        InteractionKernel operator()(const Contact& c) const { return Contact{c.b * fb}; }
        InteractionKernel operator()(const Screened& s) const {
            return Screened{s.a * fa, s.gamma * fg};
        }
        InteractionKernel operator()(const Composite& c) const {
            return Composite{Contact{c.contact.b * fb},
                             Screened{c.screened.a * fa, c.screened.gamma * fg}};
        }
    };
    return std::visit(Visitor{fb, fa, fg}, kernel);
}

} // namespace

std::pair<DimensionlessScale, InteractionKernel> to_dimensionless(const TrapGasParams& params,
                                                                  const InteractionKernel& kernel) {
    validate(kernel);
    const DimensionlessScale scale = make_scale(params);
    return {scale, rescale(kernel, 1.0 / scale.contact_unit,
                           1.0 / (scale.energy_unit * scale.length_unit), scale.length_unit)};
}

InteractionKernel to_physical(const DimensionlessScale& scale, const InteractionKernel& reduced) {
    return rescale(reduced, scale.contact_unit, scale.energy_unit * scale.length_unit,
                   1.0 / scale.length_unit);
}

} // namespace gpvar
