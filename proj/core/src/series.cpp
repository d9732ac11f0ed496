#include "wright/series.hpp"

#include <cmath>
#include <limits>

namespace wright {

using ddreal = dd::dd;
using dd::ddc;
using dd::sddc;

WrightSeries::WrightSeries(double lambda, std::complex<double> mu, int max_terms) {
    if (!(lambda > -1.0) || !std::isfinite(lambda))
        throw domain_error("wright_series: lambda must be > -1");
    if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        throw domain_error("wright_series: mu must be finite");
    if (max_terms < 1) throw domain_error("wright_series: max_terms must be >= 1");

    coef_.resize(static_cast<size_t>(max_terms));
    ddc mu_dd = dd::from_complex(mu);
    sddc factorial = dd::scaled_from({dd::from_double(1.0), dd::from_double(0.0)});
    for (int n = 0; n < max_terms; ++n) {
        // lambda*n is exact in double-double (two_prod), so gamma pole hits
        // at rational lambda stay exact
        ddreal ln = dd::two_prod(lambda, static_cast<double>(n));
        ddc w{dd::add(ln, mu_dd.re), mu_dd.im};
        if (n > 0) factorial = dd::mul(factorial, dd::scaled_from({dd::from_double(n), {}}));
        coef_[static_cast<size_t>(n)] = dd::div(dd::rgamma_scaled(w), factorial);
    }
}

std::complex<double> WrightSeries::coefficient(int n) const {
    return dd::to_complex(dd::to_ddc(coef_.at(static_cast<size_t>(n))));
}

SeriesResult WrightSeries::eval(std::complex<double> z, double abs_tol) const {
    if (!(abs_tol > 0.0)) throw domain_error("wright_series: abs_tol must be > 0");

    SeriesResult out;
    ddc zc = dd::from_complex(z);
    sddc zpow = dd::scaled_from({dd::from_double(1.0), {}});
    ddc sum{{0.0, 0.0}, {0.0, 0.0}};
    int consecutive_small = 0;
    int last_significant = -1;
    double last_mag = 0.0;
    bool stopped_early = false;

    for (size_t n = 0; n < coef_.size(); ++n) {
        sddc term_s = dd::mul(coef_[n], zpow);
        if (term_s.e2 > 1000 && (term_s.m.re.hi != 0.0 || term_s.m.im.hi != 0.0)) {
            // the term left the double range: the sum is unusable
            out.terms_used = static_cast<int>(n);
            out.tail_bound = std::numeric_limits<double>::infinity();
            out.converged = false;
            out.value = dd::to_complex(sum);
            return out;
        }
        ddc term = dd::to_ddc(term_s);
        sum = dd::add(sum, term);
        last_mag = std::hypot(term.re.hi, term.im.hi);
        if (last_mag < abs_tol) {
            if (++consecutive_small >= 3) {
                stopped_early = true;
                break;
            }
        } else {
            consecutive_small = 0;
            last_significant = static_cast<int>(n);
        }
        zpow = dd::mul(zpow, zc);
    }

    out.value = dd::to_complex(sum);
    out.terms_used = last_significant + 1;
    out.tail_bound = last_mag;
    out.converged = stopped_early || last_mag < abs_tol;
    return out;
}

SeriesResult wright_series(const WrightOrder& order, std::complex<double> z, double abs_tol,
                           int max_terms) {
    WrightSeries series(order.lambda, order.mu, max_terms);
    return series.eval(z, abs_tol);
}

}  // namespace wright
