#include "run_config.hpp"

#include "gpvar/errors.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace gpvar::cli {

namespace {

template <class T>
std::optional<T> json_value(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError("--config", std::string("key '") + key + "' has the wrong type");
    }
}

template <class T>
T pick(const std::optional<T>& flag, const std::optional<T>& file, T fallback) {
    if (flag)
        return *flag;
    if (file)
        return *file;
    return fallback;
}

template <class T>
std::optional<T> pick(const std::optional<T>& flag, const std::optional<T>& file) {
    return flag ? flag : file;
}

nlohmann::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("--config", "cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("--config", std::string("invalid JSON: ") + e.what());
    }
}

void require_positive(double v, const char* flag) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw UsageError(flag, "must be positive, got " + std::to_string(v));
}

} // namespace

RunConfig resolve(const std::string& command, const RawOptions& raw,
                  const std::string& default_format) {
    nlohmann::json file = nlohmann::json::object();
    if (raw.config)
        file = load_config(*raw.config);
    const nlohmann::json kernel_json =
        file.contains("kernel") ? file.at("kernel") : nlohmann::json::object();

    RunConfig cfg;
    cfg.command = command;
    cfg.units = pick(raw.units, json_value<std::string>(file, "units"), std::string("oscillator"));
    if (cfg.units != "si" && cfg.units != "oscillator")
        throw UsageError("--units", "must be 'si' or 'oscillator'");

    const auto file_kernel_type = json_value<std::string>(kernel_json, "type");
    std::string default_model = "local";
    if (file_kernel_type && *file_kernel_type != "contact")
        default_model = "nonlocal";
    cfg.model = pick(raw.model, json_value<std::string>(file, "model"), default_model);
    if (cfg.model != "local" && cfg.model != "nonlocal")
        throw UsageError("--model", "must be 'local' or 'nonlocal'");

    cfg.params.mass = pick(raw.mass, json_value<double>(file, "mass"), 1.0);
    cfg.params.trap_frequency = pick(raw.omega, json_value<double>(file, "omega"), 1.0);
    cfg.params.hbar = pick(raw.hbar, json_value<double>(file, "hbar"),
                           cfg.units == "si" ? 1.054571817e-34 : 1.0);
    require_positive(cfg.params.mass, "--mass");
    require_positive(cfg.params.trap_frequency, "--omega");
    require_positive(cfg.params.hbar, "--hbar");

    // Contact strength: --bN, --b or --a-s, in that order of precedence.
    const auto a_s = pick(raw.a_s, json_value<double>(file, "a_s"));
    const auto b_given = pick(raw.b, json_value<double>(kernel_json, "B"));
    const auto n_given = pick(raw.n, json_value<double>(file, "N"));
    double b = 0.0;
    if (raw.bn) {
        if (raw.b || raw.a_s)
            throw UsageError("--bN", "cannot be combined with --b or --a-s");
        if (raw.n)
            throw UsageError("--bN", "cannot be combined with --N (bN already includes N)");
        b = *raw.bn;
        cfg.n = 1.0;
    } else {
        if (raw.b && raw.a_s)
            throw UsageError("--b", "give either --b or --a-s, not both");
        if (b_given && !raw.a_s) {
            b = *b_given;
        } else if (a_s) {
            cfg.a_s = a_s;
            TrapGasParams p = cfg.params;
            p.scattering_length = *a_s;
            b = contact_strength_from_scattering(p);
        }
        cfg.n = n_given.value_or(1.0);
    }
    if (cfg.a_s)
        cfg.params.scattering_length = *cfg.a_s;
    if (!(cfg.n >= 0.0) || !std::isfinite(cfg.n))
        throw UsageError("--N", "must be non-negative");

    const double big_a = pick(raw.big_a, json_value<double>(kernel_json, "A"), 0.0);
    const double gamma = pick(raw.gamma, json_value<double>(kernel_json, "Gamma"), 0.0);
    if (!(big_a >= 0.0) || !std::isfinite(big_a))
        throw UsageError("--A", "must be non-negative");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw UsageError("--Gamma", "must be non-negative");
    if (cfg.model == "local") {
        if (big_a != 0.0)
            throw UsageError("--A", "the local model has no screened term; use --model nonlocal");
        cfg.kernel = Contact{b};
    } else {
        cfg.kernel = Composite{Contact{b}, Screened{big_a, gamma}};
    }

    if (cfg.units == "si") {
        auto [scale, reduced] = to_dimensionless(cfg.params, cfg.kernel);
        cfg.scale = scale;
        cfg.reduced_kernel = reduced;
    } else {
        cfg.reduced_kernel = cfg.kernel;
    }
    const double length = cfg.scale.length_unit;

    const auto sigma = pick(raw.sigma, json_value<double>(file, "sigma"));
    if (sigma) {
        if (!(*sigma > 0.0) || !std::isfinite(*sigma))
            throw UsageError("--sigma", "must be positive, got " + std::to_string(*sigma));
        cfg.sigma = *sigma / length;
    }
    const double lo = pick(raw.sigma_min, json_value<double>(file, "sigma_min"), 1e-3 * length);
    const double hi = pick(raw.sigma_max, json_value<double>(file, "sigma_max"), 10.0 * length);
    if (!(lo > 0.0))
        throw UsageError("--sigma-min", "must be positive");
    if (!(hi > lo) || !std::isfinite(hi))
        throw UsageError("--sigma-max", "must exceed --sigma-min");
    cfg.window = {lo / length, hi / length};
    cfg.steps = pick(raw.steps, json_value<int>(file, "steps"), 200);
    if (cfg.steps < 2)
        throw UsageError("--steps", "must be at least 2");
    cfg.log_grid = raw.log_grid;

    cfg.format = pick(raw.format, json_value<std::string>(file, "format"), default_format);
    if (cfg.format != "csv" && cfg.format != "json")
        throw UsageError("--format", "must be 'csv' or 'json'");
    cfg.out = raw.out;
    cfg.seed = pick(raw.seed, json_value<std::uint64_t>(file, "seed"), std::uint64_t{20240611});
    cfg.tol = pick(raw.tol, json_value<double>(file, "tol"));
    if (cfg.tol && !(*cfg.tol > 0.0))
        throw UsageError("--tol", "must be positive");
    cfg.header = !raw.no_header;
    return cfg;
}

double RunConfig::reduced_b() const { return as_composite(reduced_kernel).contact.b; }

Model RunConfig::model_value() const {
    try {
        if (model == "local")
            return LocalModel(reduced_b(), n);
        return NonlocalModel::from_kernel(reduced_kernel, n);
    } catch (const DomainError& e) {
        throw UsageError("", e.what());
    }
}

nlohmann::json RunConfig::to_json() const {
    const Composite given = as_composite(kernel);
    const Composite reduced = as_composite(reduced_kernel);
    nlohmann::json j = {
        {"command", command},
        {"model", model},
        {"units", units},
        {"mass", params.mass},
        {"omega", params.trap_frequency},
        {"hbar", params.hbar},
        {"kernel",
         {{"type", model == "local" ? "contact" : "composite"},
          {"B", given.contact.b},
          {"A", given.screened.a},
          {"Gamma", given.screened.gamma}}},
        {"reduced", {{"b", reduced.contact.b}, {"A", reduced.screened.a}, {"Gamma", reduced.screened.gamma}}},
        {"N", n},
        {"sigma_min", window.lo},
        {"sigma_max", window.hi},
        {"steps", steps},
        {"log_grid", log_grid},
        {"format", format},
        {"seed", seed},
    };
    if (a_s)
        j["a_s"] = *a_s;
    if (sigma)
        j["sigma"] = *sigma;
    if (tol)
        j["tol"] = *tol;
    if (units == "si")
        j["scale"] = {{"length_unit", scale.length_unit},
                      {"energy_unit", scale.energy_unit},
                      {"contact_unit", scale.contact_unit}};
    return j;
}

} // namespace gpvar::cli
