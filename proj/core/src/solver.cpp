#include "gpvar/solver.hpp"

#include "gpvar/errors.hpp"
#include "gpvar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gpvar {

EnergyBreakdown energy(const Model& model, double sigma) {
    const GaussianAnsatz ansatz(sigma);
    return std::visit([&](const auto& m) { return energy(m, ansatz); }, model);
}

double denergy_dsigma(const Model& model, double sigma) {
    const GaussianAnsatz ansatz(sigma);
    return std::visit([&](const auto& m) { return denergy_dsigma(m, ansatz); }, model);
}

double d2energy_dsigma2(const Model& model, double sigma) {
    const auto slope = [&](double s) { return denergy_dsigma(model, s); };
    return oracle::fd_derivative(slope, sigma, 1, 1e-4 * sigma).value;
}

std::optional<double> stationary_n(const Model& model, double sigma) {
    struct Visitor {
        double sigma;
        std::optional<double> operator()(const LocalModel& m) const {
            if (m.b == 0.0)
                return std::nullopt;
            return local::n_of_sigma(m.b, sigma);
        }
        std::optional<double> operator()(const NonlocalModel& m) const {
            return nonlocal::n_of_sigma_oracle(m, sigma);
        }
    };
    return std::visit(Visitor{sigma}, model);
}

double boson_number(const Model& model) {
    return std::visit([](const auto& m) { return m.n; }, model);
}

Model with_n(const Model& model, double n) {
    struct Visitor {
        double n;
        Model operator()(const LocalModel& m) const { return LocalModel(m.b, n); }
        Model operator()(const NonlocalModel& m) const {
            return NonlocalModel(m.b, m.a, m.gamma, n);
        }
    };
    return std::visit(Visitor{n}, model);
}

double contact_coupling(const Model& model) {
    return std::visit([](const auto& m) { return m.b; }, model);
}

std::string describe(const Model& model) {
    std::ostringstream out;
    out.precision(17);
    struct Visitor {
        std::ostringstream& out;
        void operator()(const LocalModel& m) const { out << "local b=" << m.b << " N=" << m.n; }
        void operator()(const NonlocalModel& m) const {
            out << "nonlocal b=" << m.b << " A=" << m.a << " Gamma=" << m.gamma << " N=" << m.n;
        }
    };
    std::visit(Visitor{out}, model);
    return out.str();
}

void SigmaWindow::validate() const {
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
        throw DomainError("sigma window must satisfy 0 < lo < hi, got [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                 int max_iter) {
    double a = lo;
    double b = hi;
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    double c = b;
    double fc = fb;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                            0.5 * tol * std::max(1.0, std::abs(b));
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic interpolation, or secant when only two points differ
            const double s = fb / fa;
            double p;
            double q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        // the step can never leave [min(b, c), max(b, c)], which lies inside [lo, hi]
        b = std::clamp(b, lo, hi);
        fb = f(b);
    }
    throw ConvergenceError("find_root: no convergence within " + std::to_string(max_iter) +
                           " iterations");
}

Extremum golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                            double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol * std::max(1.0, std::abs(x1) + std::abs(x2))) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

const char* to_string(PointKind kind) {
    switch (kind) {
    case PointKind::minimum:
        return "minimum";
    case PointKind::maximum:
        return "maximum";
    case PointKind::degenerate:
        return "degenerate";
    }
    return "?";
}

const char* to_string(Stability stability) {
    switch (stability) {
    case Stability::stable:
        return "stable";
    case Stability::metastable:
        return "metastable";
    case Stability::unstable:
        return "unstable";
    }
    return "?";
}

const char* to_string(BranchLabel label) {
    switch (label) {
    case BranchLabel::primary:
        return "primary";
    case BranchLabel::high_density:
        return "high-density";
    case BranchLabel::low_density:
        return "low-density";
    case BranchLabel::barrier:
        return "barrier";
    }
    return "?";
}

namespace {

std::vector<double> make_grid(double lo, double hi, int points, bool log_grid) {
    std::vector<double> xs(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        xs[i] = log_grid ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
    }
    xs.back() = hi;
    return xs;
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

PointKind classify(double curvature, double threshold) {
    if (std::abs(curvature) < threshold)
        return PointKind::degenerate;
    return curvature > 0.0 ? PointKind::minimum : PointKind::maximum;
}

} // namespace

std::vector<StationaryPoint> find_branches(const Model& params, double n_target,
                                           SigmaWindow window, const BranchOptions& options) {
    window.validate();
    if (!(n_target >= 0.0))
        throw DomainError("target boson number must be non-negative");
    if (options.scan_points < 3)
        throw DomainError("find_branches needs at least 3 scan points");
    const Model model = with_n(params, n_target);
    const auto slope = [&](double s) {
        return denergy_dsigma(model, std::clamp(s, window.lo, window.hi));
    };

    const std::vector<double> xs =
        make_grid(window.lo, window.hi, options.scan_points, options.log_grid);
    std::vector<double> fs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        fs[i] = slope(xs[i]);

    std::vector<double> roots;
    std::vector<bool> tangent;
    auto add_root = [&](double x, bool is_tangent) {
        roots.push_back(x);
        tangent.push_back(is_tangent);
    };
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (fs[i] == 0.0) {
            add_root(xs[i], false);
            continue;
        }
        if (sign(fs[i]) * sign(fs[i + 1]) < 0) {
            add_root(find_root(slope, xs[i], xs[i + 1], options.root_tol), false);
            continue;
        }
        // a pair of roots, or a double root, hiding inside one cell pair
        if (i == 0 || sign(fs[i - 1]) != sign(fs[i]) || sign(fs[i + 1]) != sign(fs[i]))
            continue;
        if (!(std::abs(fs[i]) < std::abs(fs[i - 1]) && std::abs(fs[i]) <= std::abs(fs[i + 1])))
            continue;
        const double s = sign(fs[i]);
        const Extremum closest = golden_section_max(
            [&](double x) { return -s * slope(x); }, xs[i - 1], xs[i + 1], 1e-12);
        const double residual = std::abs(closest.value) * std::pow(closest.x, 3);
        if (residual < options.tangency_tol) {
            add_root(closest.x, true);
        } else if (closest.value > 0.0) {
            add_root(find_root(slope, xs[i - 1], closest.x, options.root_tol), false);
            add_root(find_root(slope, closest.x, xs[i + 1], options.root_tol), false);
        }
    }
    if (fs.back() == 0.0)
        add_root(xs.back(), false);

    std::vector<std::size_t> order(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto l, auto r) { return roots[l] < roots[r]; });

    std::vector<StationaryPoint> points;
    for (std::size_t idx : order) {
        const double x = roots[idx];
        if (!points.empty() && std::abs(points.back().sigma - x) <= 2.0 * options.root_tol * std::max(1.0, x))
            continue;
        StationaryPoint p;
        p.sigma = x;
        p.n = n_target;
        p.energy = energy(model, x);
        p.curvature = d2energy_dsigma2(model, x);
        p.kind = tangent[idx] ? PointKind::degenerate
                              : classify(p.curvature, options.degenerate_curvature);
        points.push_back(p);
    }

    // Stability: maxima and inflections are unstable. With an attractive
    // contact term E -> -infinity as sigma -> 0, so every minimum is only
    // metastable; otherwise the lowest minimum is the stable state.
    const bool unbounded_below = contact_coupling(model) < 0.0 && n_target > 0.0;
    const StationaryPoint* lowest = nullptr;
    int minima = 0;
    for (const StationaryPoint& p : points) {
        if (p.kind != PointKind::minimum)
            continue;
        ++minima;
        if (lowest == nullptr || p.energy.total < lowest->energy.total)
            lowest = &p;
    }
    bool first_minimum = true;
    for (StationaryPoint& p : points) {
        if (p.kind != PointKind::minimum) {
            p.stability = Stability::unstable;
            p.label = BranchLabel::barrier;
            continue;
        }
        p.stability = (!unbounded_below && &p == lowest) ? Stability::stable : Stability::metastable;
        if (minima == 1)
            p.label = BranchLabel::primary;
        else
            p.label = first_minimum ? BranchLabel::high_density : BranchLabel::low_density;
        first_minimum = false;
    }
    return points;
}

BranchCurve sweep(const Model& model, double sigma_lo, double sigma_hi, int steps, bool log_grid) {
    if (steps < 2)
        throw DomainError("sweep needs at least 2 steps");
    SigmaWindow{sigma_lo, sigma_hi}.validate();
    BranchCurve curve;
    curve.model = describe(model);
    for (double sigma : make_grid(sigma_lo, sigma_hi, steps, log_grid)) {
        const std::optional<double> n = stationary_n(model, sigma);
        if (!n || !std::isfinite(*n) || *n < 0.0)
            continue;
        const Model at_n = with_n(model, *n);
        CurvePoint p;
        p.sigma = sigma;
        p.n = *n;
        p.energy = energy(at_n, sigma);
        p.kind = classify(d2energy_dsigma2(at_n, sigma), BranchOptions{}.degenerate_curvature);
        curve.points.push_back(p);
    }
    return curve;
}

CriticalPoint critical_scan(const Model& model, SigmaWindow window, int scan_points) {
    window.validate();
    if (!(contact_coupling(model) < 0.0))
        throw DomainError("critical_scan requires an attractive contact coupling (b < 0), got b = " +
                          std::to_string(contact_coupling(model)));
    const std::vector<double> xs = make_grid(window.lo, window.hi, scan_points, false);
    std::vector<double> ns(xs.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::optional<double> n = stationary_n(model, xs[i]);
        if (!n)
            throw DomainError("N(sigma) has a pole at sigma = " + std::to_string(xs[i]));
        ns[i] = *n;
    }
    // A pole shows up as N jumping between +large and -large: the N
    // coefficient of dE/dsigma changes sign while the single-particle part
    // does not (that part only vanishes at sigma = 1 where N passes through 0).
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const bool straddles_one = xs[i] < 1.0 && xs[i + 1] > 1.0;
        if (!straddles_one && xs[i] != 1.0 && xs[i + 1] != 1.0 && sign(ns[i]) * sign(ns[i + 1]) < 0)
            throw DomainError("N(sigma) has a pole between sigma = " + std::to_string(xs[i]) +
                              " and " + std::to_string(xs[i + 1]) + "; no finite maximum");
    }
    const auto best = static_cast<std::size_t>(std::max_element(ns.begin(), ns.end()) - ns.begin());
    if (!(ns[best] > 0.0))
        throw DomainError("no positive N(sigma) inside the window");
    if (best == 0 || best + 1 == xs.size())
        return {xs[best], ns[best]};

    const auto n_of = [&](double s) { return stationary_n(model, s).value(); };
    std::function<double(double)> dn;
    if (const auto* local_model = std::get_if<LocalModel>(&model)) {
        const double b = local_model->b;
        dn = [b](double s) { return local::dn_dsigma(b, s); };
    } else {
        dn = [&](double s) { return oracle::fd_derivative(n_of, s, 1, 1e-3 * s).value; };
    }
    const double lo = xs[best - 1];
    const double hi = xs[best + 1];
    double sigma_star;
    if (sign(dn(lo)) * sign(dn(hi)) < 0)
        sigma_star = find_root(dn, lo, hi, 1e-14);
    else
        sigma_star = golden_section_max(n_of, lo, hi, 1e-12).x;
    return {sigma_star, n_of(sigma_star)};
}

} // namespace gpvar
