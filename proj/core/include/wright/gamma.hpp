#pragma once

#include <complex>

namespace wright {

// log Gamma(z), principal branch.  Valid for complex z with Re(z) >= 0.5 and
// for real z > 0 (real arguments below 0.5 go through the reflection
// identity).  Lanczos approximation, ~15 significant digits.
std::complex<double> log_gamma(std::complex<double> z);

// 1/Gamma(z).  Entire; exactly zero when z is within 1e-14 of a nonpositive
// integer (poles of Gamma).  Lanczos for Re(z) >= 0.5, the reflection
// identity 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi otherwise.  Real input
// yields a result with imaginary part exactly zero.
std::complex<double> recip_gamma(std::complex<double> z);

double recip_gamma(double x);

}  // namespace wright
