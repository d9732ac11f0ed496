#pragma once

// Truncated series oracle for W_{lambda,mu}(z) = sum z^n / (n! Gamma(lambda n + mu)).
//
// Every term is formed in double-double arithmetic with a power-of-two scaled
// representation of 1/(n! Gamma(lambda n + mu)), so the alternating sum keeps
// ~32 significant digits through the cancellation hump.  The hump still grows
// without bound as lambda -> -1 with |z| large; when the terms have not
// settled within max_terms, or a term leaves the double range altogether,
// the result carries converged == false and must not be trusted.

#include <complex>
#include <vector>

#include "wright/dd.hpp"
#include "wright/types.hpp"

namespace wright {

struct SeriesResult {
    std::complex<double> value{0.0, 0.0};
    int terms_used = 0;        // leading terms above the tolerance
    double tail_bound = 0.0;   // magnitude of the last computed term
    bool converged = true;     // false: tail still above abs_tol at stop
};

// Precomputes the coefficient table 1/(n! Gamma(lambda n + mu)) once so that
// repeated evaluations at different z share the gamma machinery.
class WrightSeries {
  public:
    WrightSeries(double lambda, std::complex<double> mu, int max_terms);

    SeriesResult eval(std::complex<double> z, double abs_tol) const;

    // coefficient of z^n; may over- or underflow the double range even when
    // the terms it produces do not
    std::complex<double> coefficient(int n) const;

    int max_terms() const { return static_cast<int>(coef_.size()); }

  private:
    std::vector<dd::sddc> coef_;
};

// One-shot evaluation.  lambda may be any value > -1 here: the oracle also
// serves the degenerate lambda = 0 case and arguments outside the contour
// method's guard bands.
SeriesResult wright_series(const WrightOrder& order, std::complex<double> z, double abs_tol,
                           int max_terms);

}  // namespace wright
