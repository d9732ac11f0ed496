#include "wright/selector.hpp"

#include <cfloat>
#include <cmath>

#include "wright/brent.hpp"

namespace wright {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBrentXtol = 1e-4;  // N is integer-valued downstream

ContourParams finish(int n, double c, double xi, double t, const ToleranceProfile& tol) {
    ContourParams p;
    p.n_nodes = n;
    p.c = c;
    p.xi = xi;
    double s = 2.0 + xi * c;
    double n2 = static_cast<double>(n) * static_cast<double>(n);
    p.step = s * tol.ell / (kPi * n2);
    p.gamma = kPi * kPi * n2 / (s * s * t * tol.ell);
    return p;
}

}  // namespace

ContourParams select_contour(std::complex<double> mu, double t, const ToleranceProfile& tol) {
    if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("select_contour: t must be > 0");
    if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        throw domain_error("select_contour: mu must be finite");

    const double re_mu = mu.real();
    const double ell = tol.ell;
    const double ell_tol = tol.ell_tol;
    const double scale = std::sqrt(ell * ell_tol) / kPi;

    if (re_mu < 2.0) {
        int n = static_cast<int>(std::floor(std::sqrt(2.0 * ell * ell_tol) / kPi));
        return finish(n, 1.0, 2.0, t, tol);
    }

    double c_star = 0.0;
    double xi = 0.0;
    double n_of_c_star = 0.0;
    if (re_mu > 2.0) {
        const double q = (2.0 - re_mu) / ell_tol;
        auto n_of_c = [scale, q](double c) {
            return scale * std::sqrt(1.0 + (1.0 / c) * (1.0 + q * std::log1p(-c)));
        };
        BrentResult r = brent_min(n_of_c, 0.0, 1.0, kBrentXtol);
        c_star = r.x;
        n_of_c_star = r.fx;
        xi = 2.0 / (1.0 + q * std::log1p(-c_star));
    } else {
        // Re(mu) == 2
        const double d = ell - ell_tol;
        if (!(d > 0.0))
            throw infeasible_tolerance_error(
                "select_contour: Re(mu) = 2 requires eps_machine < eps_target");
        auto n_of_c = [scale, ell_tol, d](double c) {
            double inner = -std::log(d * (1.0 - c) * (1.0 - c));
            return scale *
                   std::sqrt(1.0 + (1.0 / c) * (1.0 + std::log(inner) / ell_tol));
        };
        double a = 1.0 - 1.0 / std::sqrt(d) + DBL_EPSILON;
        BrentResult r = brent_min(n_of_c, a, 1.0, kBrentXtol);
        c_star = r.x;
        n_of_c_star = r.fx;
        xi = 2.0 / (1.0 + std::log(-std::log(d * (1.0 - c_star) * (1.0 - c_star))) / ell_tol);
    }
    int n = static_cast<int>(std::ceil(n_of_c_star));
    return finish(n, c_star, xi, t, tol);
}

ContourParams rebalanced_contour(int n_nodes, double c, double xi, double t,
                                 const ToleranceProfile& tol) {
    if (n_nodes < 1) throw domain_error("rebalanced_contour: n_nodes must be >= 1");
    if (!(t > 0.0)) throw domain_error("rebalanced_contour: t must be > 0");
    return finish(n_nodes, c, xi, t, tol);
}

}  // namespace wright
