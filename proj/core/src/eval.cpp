#include "wright/eval.hpp"

#include <cmath>

#include "wright/contour.hpp"
#include "wright/gamma.hpp"
#include "wright/selector.hpp"

namespace wright {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kImagMuWarnThreshold = 5.0;

}  // namespace

double trapezoid_halved_sum(const WrightOrder& order, const EvalPoint& point,
                            const ContourParams& params) {
    if (order.mu.imag() != 0.0)
        throw domain_error("trapezoid_halved_sum: requires real mu");
    const double h = params.step;
    double acc = 0.0;
    for (int k = params.n_nodes; k >= 1; --k)
        acc += integrand(k * h, order, point, params.gamma).imag();
    double g0 = integrand(0.0, order, point, params.gamma).imag();
    return (h / (2.0 * kPi)) * (g0 + 2.0 * acc);
}

std::complex<double> trapezoid_full_sum(const WrightOrder& order, const EvalPoint& point,
                                        const ContourParams& params) {
    const double h = params.step;
    std::complex<double> acc{0.0, 0.0};
    for (int k = params.n_nodes; k >= 1; --k) {
        acc += integrand(k * h, order, point, params.gamma);
        acc += integrand(-k * h, order, point, params.gamma);
    }
    acc += integrand(0.0, order, point, params.gamma);
    // division by 2 pi i
    return acc * std::complex<double>{0.0, -h / (2.0 * kPi)};
}

EvalResult wright_eval(const WrightOrder& order, const EvalPoint& point,
                       const ContourParams& params, const ToleranceProfile& tol) {
    require_valid_order(order);
    require_valid_point(point);
    std::complex<double> value;
    if (order.mu.imag() == 0.0)
        value = {trapezoid_halved_sum(order, point, params), 0.0};
    else
        value = trapezoid_full_sum(order, point, params);

    EvalResult r;
    r.value = value;
    r.contour = params;
    r.est_roundoff = tol.eps_machine * std::exp(params.gamma * point.t);
    r.accuracy_warning = std::fabs(order.mu.imag()) > kImagMuWarnThreshold;
    return r;
}

EvalResult wright_eval(const WrightOrder& order, const EvalPoint& point,
                       const ToleranceProfile& tol) {
    require_valid_order(order);
    require_valid_point(point);
    ContourParams params = select_contour(order.mu, point.t, tol);

    if (point.x == 0.0) {
        // exact short-circuit: f = t^{mu-1}/Gamma(mu)
        std::complex<double> value;
        if (order.mu.imag() == 0.0) {
            value = {std::pow(point.t, order.mu.real() - 1.0) * recip_gamma(order.mu.real()), 0.0};
        } else {
            value = std::exp((order.mu - 1.0) * std::log(point.t)) * recip_gamma(order.mu);
        }
        EvalResult r;
        r.value = value;
        r.contour = params;
        r.est_roundoff = tol.eps_machine * std::exp(params.gamma * point.t);
        r.accuracy_warning = std::fabs(order.mu.imag()) > kImagMuWarnThreshold;
        return r;
    }
    return wright_eval(order, point, params, tol);
}

double mainardi_eval(double nu, double z) {
    if (!(nu > 0.0) || !(nu < 1.0))
        throw domain_error("mainardi_eval: nu must lie in (0,1)");
    if (!(z >= 0.0)) throw domain_error("mainardi_eval: z must be >= 0");
    return wright_eval(WrightOrder{-nu, {1.0 - nu, 0.0}}, EvalPoint{1.0, z}).value.real();
}

}  // namespace wright
