#include "gpvar/errors.hpp"
#include "gpvar/nonlocal_model.hpp"
#include "gpvar/params.hpp"
#include "gpvar/solver.hpp"
#include "property.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace gpvar;
using gpvar::test::rel_diff;

namespace {

// A 87Rb-like condensate in SI units.
TrapGasParams rubidium() {
    TrapGasParams p;
    p.mass = 1.443160648e-25;
    p.trap_frequency = 2.0 * std::numbers::pi * 100.0;
    p.hbar = 1.054571817e-34;
    p.scattering_length = -5.3e-9;
    return p;
}

} // namespace

TEST_CASE("validation of trap constants") {
    TrapGasParams p;
    CHECK_NOTHROW(p.validate());
    p.mass = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.mass = 1.0;
    p.trap_frequency = -1.0;
    CHECK_THROWS_AS(make_scale(p), DomainError);
    p.trap_frequency = 1.0;
    p.hbar = std::nan("");
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("kernel validation") {
    CHECK_NOTHROW(validate(Composite{{-1.0}, {2.0, 0.5}}));
    CHECK_THROWS_AS(validate(Screened{1.0, -0.1}), DomainError);
    CHECK_THROWS_AS(validate(Contact{INFINITY}), DomainError);
}

TEST_CASE("as_composite fills absent parts with zero") {
    const Composite c = as_composite(Contact{2.5});
    CHECK(c.contact.b == 2.5);
    CHECK(c.screened.a == 0.0);
    const Composite s = as_composite(Screened{1.0, 3.0});
    CHECK(s.contact.b == 0.0);
    CHECK(s.screened.gamma == 3.0);
}

TEST_CASE("contact strength from scattering length") {
    TrapGasParams p;
    p.scattering_length = 0.0;
    CHECK(contact_strength_from_scattering(p) == 0.0);
    p.scattering_length = 1.0;
    CHECK(rel_diff(contact_strength_from_scattering(p), 4.0 * std::numbers::pi) < 1e-15);
    p.scattering_length = -0.005;
    // 40-digit reference for 4 pi (-0.005)
    CHECK(rel_diff(contact_strength_from_scattering(p), -0.062831853071795864769) < 1e-15);
}

TEST_CASE("identity reduction in oscillator units") {
    const auto [scale, reduced] = to_dimensionless(TrapGasParams{}, Contact{1.0});
    CHECK(scale.length_unit == 1.0);
    CHECK(scale.energy_unit == 1.0);
    CHECK(scale.contact_unit == 1.0);
    CHECK(as_composite(reduced).contact.b == 1.0);
}

TEST_CASE("reduction of a composite kernel with A = 0 equals the contact reduction") {
    const TrapGasParams p = rubidium();
    const double big_b = contact_strength_from_scattering(p);
    const Composite with_zero = as_composite(to_dimensionless(p, Composite{{big_b}, {0.0, 1e6}}).second);
    const Composite contact = as_composite(to_dimensionless(p, Contact{big_b}).second);
    CHECK(with_zero.contact.b == contact.contact.b);
    CHECK(with_zero.screened.a == 0.0);
}

TEST_CASE("SI round trip") {
    const TrapGasParams p = rubidium();
    const double big_b = contact_strength_from_scattering(p);
    const Composite given{{big_b}, {3.1e-36, 2.0e5}};
    const auto [scale, reduced] = to_dimensionless(p, given);
    const Composite back = as_composite(to_physical(scale, reduced));
    CHECK(rel_diff(back.contact.b, given.contact.b) < 1e-12);
    CHECK(rel_diff(back.screened.a, given.screened.a) < 1e-12);
    CHECK(rel_diff(back.screened.gamma, given.screened.gamma) < 1e-12);
    CHECK(rel_diff(scale.length_unit, std::sqrt(p.hbar / (p.mass * p.trap_frequency))) < 1e-15);
    CHECK(rel_diff(scale.energy_unit, p.hbar * p.trap_frequency) < 1e-15);
}

TEST_CASE("reduced b equals 4 pi a_s / a_ho") {
    const TrapGasParams p = rubidium();
    const auto [scale, reduced] = to_dimensionless(p, Contact{contact_strength_from_scattering(p)});
    const double expected = 4.0 * std::numbers::pi * p.scattering_length / scale.length_unit;
    CHECK(rel_diff(as_composite(reduced).contact.b, expected) < 1e-12);
}

TEST_CASE("energies scale with hbar omega under a change of units") {
    // The same physical system in SI and in CGS units.
    const TrapGasParams si = rubidium();
    TrapGasParams cgs = si;
    cgs.mass = si.mass * 1e3;
    cgs.hbar = si.hbar * 1e7;
    cgs.scattering_length = si.scattering_length * 1e2;
    const Composite k_si{{contact_strength_from_scattering(si)}, {4.0e-36, 3.0e5}};
    const Composite k_cgs{{k_si.contact.b * 1e13}, {k_si.screened.a * 1e9, k_si.screened.gamma * 1e-2}};
    CHECK(rel_diff(contact_strength_from_scattering(cgs), k_cgs.contact.b) < 1e-12);

    const auto [scale_si, red_si] = to_dimensionless(si, k_si);
    const auto [scale_cgs, red_cgs] = to_dimensionless(cgs, k_cgs);
    CHECK(rel_diff(scale_cgs.energy_unit, scale_si.energy_unit * 1e7) < 1e-12);
    CHECK(rel_diff(scale_cgs.length_unit, scale_si.length_unit * 1e2) < 1e-12);

    const double n = 250.0;
    for (double sigma_si : {0.4e-6, 1.08e-6, 3.0e-6}) {
        const Model m_si = NonlocalModel::from_kernel(red_si, n);
        const Model m_cgs = NonlocalModel::from_kernel(red_cgs, n);
        const EnergyBreakdown e_si = energy(m_si, sigma_si / scale_si.length_unit).scaled(scale_si.energy_unit);
        const EnergyBreakdown e_cgs =
            energy(m_cgs, sigma_si * 1e2 / scale_cgs.length_unit).scaled(scale_cgs.energy_unit);
        CAPTURE(sigma_si);
        CHECK(rel_diff(e_cgs.total / scale_cgs.energy_unit, e_si.total / scale_si.energy_unit) < 1e-10);
        CHECK(rel_diff(e_cgs.total, e_si.total * 1e7) < 1e-10);
        CHECK(rel_diff(e_cgs.interaction, e_si.interaction * 1e7) < 1e-10);
    }
}
