#include "wright/brent.hpp"

#include <cmath>
#include <limits>

#include "wright/types.hpp"

namespace wright {

BrentResult brent_min(const std::function<double(double)>& f, double a, double b, double xtol,
                      int max_iter) {
    if (!(a < b)) throw domain_error("brent_min: requires a < b");
    if (!(xtol >= 0.0)) throw domain_error("brent_min: xtol must be >= 0");

    auto eval = [&f](double t) {
        double v = f(t);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt(5))/2
    const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());

    double x = a + kGolden * (b - a);
    double w = x, v = x;
    double fx = eval(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        double m = 0.5 * (a + b);
        double tol1 = sqrt_eps * std::fabs(x) + xtol / 3.0;
        double tol2 = 2.0 * tol1;
        if (std::fabs(x - m) <= tol2 - 0.5 * (b - a)) return {x, fx};

        bool use_golden = true;
        if (std::fabs(e) > tol1) {
            // fit a parabola through (v,fv), (w,fw), (x,fx)
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::fabs(q);
            double e_old = e;
            e = d;
            if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x)) {
                d = p / q;
                double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
                use_golden = false;
            }
        }
        if (use_golden) {
            e = (x < m) ? b - x : a - x;
            d = kGolden * e;
        }

        double u = (std::fabs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
        double fu = eval(u);

        if (fu <= fx) {
            if (u < x)
                b = x;
            else
                a = x;
            v = w, fv = fw;
            w = x, fw = fx;
            x = u, fx = fu;
        } else {
            if (u < x)
                a = u;
            else
                b = u;
            if (fu <= fw || w == x) {
                v = w, fv = fw;
                w = u, fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u, fv = fu;
            }
        }
    }
    throw iteration_limit_error("brent_min: no convergence within iteration limit");
}

}  // namespace wright
