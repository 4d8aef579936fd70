#pragma once

// Brute-force reference evaluations of the energy functional. Nothing in
// this module uses the closed forms of local_model or nonlocal_model; it
// integrates the functional directly for the Gaussian trial state.

#include "gpvar/ansatz.hpp"
#include "gpvar/errors.hpp"
#include "gpvar/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <vector>

namespace gpvar::oracle {

struct QuadratureSpec {
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;
    int max_subdivisions = 4000;
    double outer_radius = 0.0; ///< integration cutoff; <= 0 selects 12 sigma
};

/// Energy per particle of the Gaussian of width sigma for `n` bosons under
/// the reduced kernel, by adaptive quadrature. The screened part integrates
/// the exact angular average of exp(-Gamma s)/s over two radii.
/// Throws ConvergenceError when the tolerance is not met.
EnergyBreakdown quad_energy(const InteractionKernel& kernel, double n, double sigma,
                            const QuadratureSpec& spec = {});

/// Integral of |psi|^2 over space. Equals 1 for every sigma.
double quad_norm(double sigma, const QuadratureSpec& spec = {});

/// Pair integral of the screened kernel, <<V(|r - r'|)>>, for V = -A exp(-Gamma s)/s.
double quad_screened_pair(double a, double gamma, double sigma, const QuadratureSpec& spec = {});

struct Derivative {
    double value;
    double error; ///< estimated absolute error
};

/// Central difference of order 1 or 2 refined by Richardson extrapolation
/// (Ridders' tableau). `h0` is the initial step; 0 selects 0.05*|x|.
/// Throws DomainError on non-finite samples.
Derivative fd_derivative(const std::function<double(double)>& f, double x, int order,
                         double h0 = 0.0);

struct MonteCarloEstimate {
    double value;
    double std_error;
};

/// Monte Carlo estimate of the screened pair integral by sampling both
/// particles from |psi|^2. Deterministic for a given seed. Kernels with a
/// contact part cannot be sampled and raise DomainError, as do fewer than
/// 10^4 samples.
MonteCarloEstimate mc_pair_integral(const InteractionKernel& kernel, double sigma,
                                    std::int64_t samples, std::uint64_t seed = 20240611);

namespace detail {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kronrod_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1)
            gauss += gauss_weights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

/// Neumaier-compensated sum, independent of accumulation order up to rounding.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Globally adaptive bisection driven by the largest local error estimate.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                     int max_subdivisions) {
    if (a == b)
        return {};
    std::priority_queue<Segment> heap;
    heap.push(gauss_kronrod_15(f, a, b));
    double value = heap.top().value;
    double error = heap.top().error;
    int subdivisions = 0;
    while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
        if (subdivisions >= max_subdivisions)
            throw ConvergenceError("adaptive quadrature did not reach tolerance within " +
                                   std::to_string(max_subdivisions) + " subdivisions");
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod_15(f, worst.a, mid);
        const Segment right = gauss_kronrod_15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
        if (error < 0.0)
            error = 0.0;
    }
    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    CompensatedSum total;
    CompensatedSum total_error;
    for (const Segment& s : segments) {
        total.add(s.value);
        total_error.add(s.error);
    }
    return {total.value(), total_error.value(), subdivisions};
}

} // namespace detail

} // namespace gpvar::oracle
