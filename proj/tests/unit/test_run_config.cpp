#include "run_config.hpp"

#include "property.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

using namespace gpvar;
using namespace gpvar::cli;
using gpvar::test::rel_diff;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = std::string("gpvar_test_") + name + ".json";
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("defaults") {
    const RunConfig c = resolve("energy", RawOptions{});
    CHECK(c.model == "local");
    CHECK(c.units == "oscillator");
    CHECK(c.n == 1.0);
    CHECK(c.window.lo == 1e-3);
    CHECK(c.window.hi == 10.0);
    CHECK(c.format == "json");
    CHECK(c.header);
    CHECK(resolve("sweep", RawOptions{}, "csv").format == "csv");
}

TEST_CASE("bN sets the coupling with N = 1") {
    RawOptions raw;
    raw.bn = -3.0;
    const RunConfig c = resolve("energy", raw);
    CHECK(c.reduced_b() == -3.0);
    CHECK(c.n == 1.0);
    raw.n = 2.0;
    CHECK_THROWS_AS(resolve("energy", raw), UsageError);
    raw.n.reset();
    raw.b = 1.0;
    CHECK_THROWS_AS(resolve("energy", raw), UsageError);
}

TEST_CASE("scattering length gives b = 4 pi a_s in oscillator units") {
    RawOptions raw;
    raw.a_s = -0.005;
    const RunConfig c = resolve("critical", raw);
    CHECK(rel_diff(c.reduced_b(), -0.062831853071795864769) < 1e-15);
}

TEST_CASE("errors name the offending flag") {
    RawOptions raw;
    raw.sigma = -1.0;
    try {
        resolve("energy", raw);
        FAIL("expected a usage error");
    } catch (const UsageError& e) {
        CHECK(e.flag() == "--sigma");
        CHECK(std::string(e.what()).find("--sigma") != std::string::npos);
    }
    RawOptions bad_model;
    bad_model.model = "quantum";
    CHECK_THROWS_AS(resolve("energy", bad_model), UsageError);
    RawOptions bad_window;
    bad_window.sigma_min = 2.0;
    bad_window.sigma_max = 1.0;
    CHECK_THROWS_AS(resolve("sweep", bad_window), UsageError);
    RawOptions screened_local;
    screened_local.big_a = 1.0;
    CHECK_THROWS_AS(resolve("energy", screened_local), UsageError);
}

TEST_CASE("config file with flag override") {
    const std::string path = write_temp(
        "override", R"({"kernel": {"type": "composite", "B": -0.01, "A": 50, "Gamma": 8}, "N": 1, "sigma": 0.7})");
    RawOptions raw;
    raw.config = path;
    RunConfig c = resolve("branches", raw);
    CHECK(c.model == "nonlocal");
    const Composite k = as_composite(c.reduced_kernel);
    CHECK(k.contact.b == -0.01);
    CHECK(k.screened.a == 50.0);
    CHECK(k.screened.gamma == 8.0);
    CHECK(*c.sigma == 0.7);

    raw.gamma = 4.0;
    raw.sigma = 0.9;
    c = resolve("branches", raw);
    CHECK(as_composite(c.reduced_kernel).screened.gamma == 4.0);
    CHECK(*c.sigma == 0.9);
    std::remove(path.c_str());
}

TEST_CASE("malformed config files") {
    RawOptions raw;
    raw.config = "does/not/exist.json";
    CHECK_THROWS_AS(resolve("energy", raw), UsageError);
    const std::string path = write_temp("bad", "{not json");
    raw.config = path;
    CHECK_THROWS_AS(resolve("energy", raw), UsageError);
    const std::string typed = write_temp("typed", R"({"N": "many"})");
    raw.config = typed;
    CHECK_THROWS_AS(resolve("energy", raw), UsageError);
    std::remove(path.c_str());
    std::remove(typed.c_str());
}

TEST_CASE("SI inputs are reduced to oscillator units") {
    RawOptions raw;
    raw.units = "si";
    raw.mass = 1.443160648e-25;
    raw.omega = 2.0 * std::numbers::pi * 100.0;
    raw.a_s = -5.3e-9;
    const double a_ho = std::sqrt(1.054571817e-34 / (*raw.mass * *raw.omega));
    raw.sigma = 0.5 * a_ho;
    const RunConfig c = resolve("energy", raw);
    CHECK(rel_diff(*c.sigma, 0.5) < 1e-12);
    CHECK(rel_diff(c.reduced_b(), 4.0 * std::numbers::pi * *raw.a_s / a_ho) < 1e-12);
    CHECK(rel_diff(c.window.lo, 1e-3) < 1e-12);
    CHECK(rel_diff(c.scale.length_unit, a_ho) < 1e-12);
}

TEST_CASE("config echo") {
    RawOptions raw;
    raw.b = 2.0;
    raw.n = 3.0;
    const nlohmann::json j = resolve("energy", raw).to_json();
    CHECK(j.at("command") == "energy");
    CHECK(j.at("kernel").at("B") == 2.0);
    CHECK(j.at("N") == 3.0);
}
