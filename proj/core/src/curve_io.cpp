#include "gpvar/curve_io.hpp"

#include "gpvar/format.hpp"

#include <ostream>

namespace gpvar {

namespace {

void write_energy_columns(std::ostream& out, const EnergyBreakdown& e) {
    out << format_double(e.total) << ',' << format_double(e.kinetic) << ','
        << format_double(e.trap) << ',' << format_double(e.interaction);
}

} // namespace

void write_csv(std::ostream& out, const BranchCurve& curve) {
    out << "sigma,n,e_total,e_kin,e_trap,e_int,kind\n";
    for (const CurvePoint& p : curve.points) {
        out << format_double(p.sigma) << ',' << format_double(p.n) << ',';
        write_energy_columns(out, p.energy);
        out << ',' << to_string(p.kind) << '\n';
    }
}

nlohmann::json to_json(const BranchCurve& curve) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CurvePoint& p : curve.points) {
        rows.push_back({{"sigma", p.sigma},
                        {"n", p.n},
                        {"e_total", p.energy.total},
                        {"e_kin", p.energy.kinetic},
                        {"e_trap", p.energy.trap},
                        {"e_int", p.energy.interaction},
                        {"kind", to_string(p.kind)}});
    }
    return {{"model", curve.model}, {"points", rows}};
}

nlohmann::json to_json(const EnergyBreakdown& e) {
    return {{"kinetic", e.kinetic}, {"trap", e.trap}, {"interaction", e.interaction},
            {"total", e.total}};
}

nlohmann::json to_json(const StationaryPoint& p) {
    return {{"sigma", p.sigma},
            {"n", p.n},
            {"e_total", p.energy.total},
            {"e_kin", p.energy.kinetic},
            {"e_trap", p.energy.trap},
            {"e_int", p.energy.interaction},
            {"curvature", p.curvature},
            {"kind", to_string(p.kind)},
            {"stability", to_string(p.stability)},
            {"label", to_string(p.label)}};
}

nlohmann::json to_json(const std::vector<StationaryPoint>& points) {
    nlohmann::json rows = nlohmann::json::array();
    for (const StationaryPoint& p : points)
        rows.push_back(to_json(p));
    return rows;
}

void write_csv(std::ostream& out, const std::vector<StationaryPoint>& points) {
    out << "sigma,n,e_total,e_kin,e_trap,e_int,kind,stability,label\n";
    for (const StationaryPoint& p : points) {
        out << format_double(p.sigma) << ',' << format_double(p.n) << ',';
        write_energy_columns(out, p.energy);
        out << ',' << to_string(p.kind) << ',' << to_string(p.stability) << ','
            << to_string(p.label) << '\n';
    }
}

} // namespace gpvar
