#pragma once

// Minimal property-testing helpers: seeded generators and a driver that
// reports the first failing sample.

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace gpvar::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

/// Runs `property(gen, describe)` for `cases` samples. The property returns
/// true on success and writes its sample into `describe` for failure output.
template <class Property>
void for_all(int cases, std::uint64_t seed, Property&& property) {
    Gen gen(seed);
    for (int i = 0; i < cases; ++i) {
        std::ostringstream sample;
        sample.precision(17);
        if (!property(gen, sample)) {
            FAIL("property failed at case " << i << " (seed " << seed << "): " << sample.str());
            return;
        }
    }
}

inline double rel_diff(double x, double ref) {
    return ref == 0.0 ? std::abs(x) : std::abs(x - ref) / std::abs(ref);
}

} // namespace gpvar::test
