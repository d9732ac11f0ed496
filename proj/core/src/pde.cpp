#include "wright/pde.hpp"

#include <algorithm>
#include <cmath>

#include "wright/eval.hpp"
#include "wright/fft.hpp"
#include "wright/gamma.hpp"
#include "wright/quadrature.hpp"
#include "wright/selector.hpp"

namespace wright::pde {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw domain_error(std::string(what) + " must be > 0");
}

// one kernel sample per grid point, sharing a single contour selection
std::vector<double> sample_kernel(const GridFunction& grid, double nu, double D, double t,
                                  double mu) {
    WrightOrder order{-nu, {mu, 0.0}};
    require_valid_order(order);
    const double sqrt_d = std::sqrt(D);
    ContourParams params = select_contour(order.mu, t, ToleranceProfile::defaults());
    std::vector<double> kernel(static_cast<size_t>(grid.n()));
    const double t_pow = std::pow(t, mu - 1.0);
    for (int i = 0; i < grid.n(); ++i) {
        double xs = std::fabs(grid.x(i)) / sqrt_d;
        double v;
        if (xs == 0.0)
            v = t_pow * recip_gamma(mu);
        else
            v = trapezoid_halved_sum(order, EvalPoint{t, xs}, params);
        kernel[static_cast<size_t>(i)] = v / (2.0 * sqrt_d);
    }
    return kernel;
}

}  // namespace

double cauchy_green(double nu, double D, double x, double t) {
    if (!(nu > 0.0) || !(nu < 1.0)) throw domain_error("cauchy_green: nu must lie in (0,1)");
    require_positive(D, "cauchy_green: D");
    require_positive(t, "cauchy_green: t");
    double sqrt_d = std::sqrt(D);
    EvalResult r = wright_eval(WrightOrder{-nu, {1.0 - nu, 0.0}}, EvalPoint{t, std::fabs(x) / sqrt_d});
    return r.value.real() / (2.0 * sqrt_d);
}

double cauchy_green_primitive(double nu, double D, double x, double t) {
    if (!(nu > 0.5) || !(nu <= 1.0))
        throw domain_error("cauchy_green_primitive: nu must lie in (1/2,1]");
    require_positive(D, "cauchy_green_primitive: D");
    require_positive(t, "cauchy_green_primitive: t");
    double sqrt_d = std::sqrt(D);
    EvalResult r = wright_eval(WrightOrder{-nu, {2.0 - nu, 0.0}}, EvalPoint{t, std::fabs(x) / sqrt_d});
    return r.value.real() / (2.0 * sqrt_d);
}

CauchySolution cauchy_solve(const CauchyProblem& problem, double t) {
    const double nu = problem.nu;
    if (!(nu > 0.0) || !(nu <= 1.0)) throw domain_error("cauchy_solve: nu must lie in (0,1]");
    require_positive(problem.diffusivity, "cauchy_solve: D");
    require_positive(t, "cauchy_solve: t");
    problem.g.validate();
    const bool wave_regime = nu > 0.5;
    if (wave_regime != problem.p.has_value())
        throw domain_error("cauchy_solve: initial velocity p is required iff nu > 1/2");
    if (problem.p && !problem.p->same_grid(problem.g))
        throw domain_error("cauchy_solve: g and p must share the same grid");

    const GridFunction& g = problem.g;
    const double dx = g.dx;
    const int n = g.n();

    std::vector<double> kernel = sample_kernel(g, nu, problem.diffusivity, t, 1.0 - nu);

    double kernel_max = 0.0;
    for (double v : kernel) kernel_max = std::max(kernel_max, std::fabs(v));
    double edge = std::max(std::fabs(kernel.front()), std::fabs(kernel.back()));
    bool warn = edge > 1e-12 * kernel_max;

    std::vector<double> conv = periodic_convolve(g.values, kernel);
    if (wave_regime) {
        std::vector<double> kernel1 =
            sample_kernel(g, nu, problem.diffusivity, t, 2.0 - nu);
        std::vector<double> conv1 = periodic_convolve(problem.p->values, kernel1);
        for (int i = 0; i < n; ++i) conv[static_cast<size_t>(i)] += conv1[static_cast<size_t>(i)];
    }

    // half-window shift recentring the kernel peak, then the dx weight
    GridFunction u = GridFunction::zeros(g.x_min, dx, n);
    int half = n / 2;
    for (int i = 0; i < n; ++i)
        u.values[static_cast<size_t>(i)] = dx * conv[static_cast<size_t>((i + half) % n)];

    return {std::move(u), warn};
}

double signalling_green(double nu, double D, double x, double t) {
    if (!(nu > 0.0) || !(nu <= 0.5))
        throw domain_error("signalling_green: nu must lie in (0,1/2]");
    require_positive(D, "signalling_green: D");
    require_positive(x, "signalling_green: x");
    require_positive(t, "signalling_green: t");
    EvalResult r = wright_eval(WrightOrder{-nu, {0.0, 0.0}}, EvalPoint{t, x / std::sqrt(D)});
    return r.value.real();
}

SignallingSolution signalling_solve(const std::function<double(double)>& h, double nu, double D,
                                    double x, std::span<const double> t_grid, double quad_tol) {
    if (!(nu > 0.0) || !(nu <= 0.5))
        throw domain_error("signalling_solve: nu must lie in (0,1/2]");
    require_positive(D, "signalling_solve: D");
    require_positive(x, "signalling_solve: x");
    if (!(quad_tol > 0.0)) throw domain_error("signalling_solve: quad_tol must be > 0");

    SignallingSolution out;
    out.values.reserve(t_grid.size());
    for (double t : t_grid) {
        require_positive(t, "signalling_solve: t");
        auto f = [&](double tau) {
            if (tau <= 0.0) return 0.0;  // super-exponential decay of G_S as tau -> 0
            return signalling_green(nu, D, x, tau) * h(t - tau);
        };
        TrapezoidResult r = adaptive_trapezoid(f, 0.0, t, quad_tol);
        out.values.push_back(r.value);
        out.tolerance_met = out.tolerance_met && r.tolerance_met;
    }
    return out;
}

TwoRodConfig TwoRodConfig::make(double p0, double rho, double a1, double a2, double k1, double k2,
                                double alpha) {
    require_positive(rho, "TwoRodConfig: rho");
    require_positive(a1, "TwoRodConfig: a1");
    require_positive(a2, "TwoRodConfig: a2");
    require_positive(k1, "TwoRodConfig: k1");
    require_positive(k2, "TwoRodConfig: k2");
    if (!(alpha > 0.0) || !(alpha <= 2.0)) throw domain_error("TwoRodConfig: alpha must lie in (0,2]");
    TwoRodConfig c;
    c.p0 = p0;
    c.rho = rho;
    c.a1 = a1;
    c.a2 = a2;
    c.k1 = k1;
    c.k2 = k2;
    c.alpha = alpha;
    c.eta = k1 * std::sqrt(a2) / (k2 * std::sqrt(a1));
    return c;
}

double tworod_solve(const TwoRodConfig& config, double x, double t) {
    require_positive(t, "tworod_solve: t");
    // alpha = 2 maps to lambda = -1; clamp to the admissible boundary
    double nu = std::min(config.alpha / 2.0, -kLambdaMin);
    const double ta = std::pow(t, config.alpha / 2.0);
    const double s1 = std::sqrt(config.a1) * ta;
    const double s2 = std::sqrt(config.a2) * ta;
    const double eta = config.eta;

    if (x >= 0.0) {
        double direct = mainardi_eval(nu, std::fabs(x - config.rho) / s1);
        double reflected = mainardi_eval(nu, (x + config.rho) / s1);
        return config.p0 / (2.0 * std::sqrt(config.a1) * ta) *
               (direct + (eta - 1.0) / (eta + 1.0) * reflected);
    }
    double arg = std::fabs(x) / s2 + config.rho / s1;
    return eta * config.p0 / ((eta + 1.0) * std::sqrt(config.a1) * ta) * mainardi_eval(nu, arg);
}

}  // namespace wright::pde
