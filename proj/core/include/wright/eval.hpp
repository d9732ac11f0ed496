#pragma once

#include <complex>

#include "wright/types.hpp"

namespace wright {

// f_{lambda,mu}(t;x) = t^{mu-1} W_{lambda,mu}(-|x| t^lambda) by the
// trapezoidal rule on the parabolic contour, with parameters from
// select_contour.  x = 0 short-circuits to t^{mu-1}/Gamma(mu).  For real mu
// the conjugate symmetry of the integrand halves the sum and the result's
// imaginary part is exactly zero.
EvalResult wright_eval(const WrightOrder& order, const EvalPoint& point,
                       const ToleranceProfile& tol = ToleranceProfile::defaults());

// Same, with explicitly prescribed contour parameters (no selection, no x=0
// short-circuit).
EvalResult wright_eval(const WrightOrder& order, const EvalPoint& point,
                       const ContourParams& params,
                       const ToleranceProfile& tol = ToleranceProfile::defaults());

// The full (2N+1)-node complex trapezoidal sum, no symmetry halving.
std::complex<double> trapezoid_full_sum(const WrightOrder& order, const EvalPoint& point,
                                        const ContourParams& params);

// The halved sum (h/2pi) [Im g(0) + 2 sum_{k=1..N} Im g(kh)]; requires
// Im(mu) = 0.
double trapezoid_halved_sum(const WrightOrder& order, const EvalPoint& point,
                            const ContourParams& params);

// Mainardi auxiliary function M_nu(z) = W_{-nu,1-nu}(-z), z >= 0.
double mainardi_eval(double nu, double z);

}  // namespace wright
