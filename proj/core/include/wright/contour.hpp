#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "wright/types.hpp"

namespace wright {

// Parabolic contour z(u) = gamma (i u + 1)^2 and its derivative
// z'(u) = 2 i gamma (i u + 1).  Im(z) vanishes only at u = 0, where
// z = gamma > 0, so the contour never meets the branch cut on the
// negative real axis.
inline std::pair<std::complex<double>, std::complex<double>> contour_point(double u,
                                                                           double gamma) {
    if (!(gamma > 0.0)) throw domain_error("contour_point: gamma must be > 0");
    std::complex<double> z{gamma * (1.0 - u * u), gamma * 2.0 * u};
    std::complex<double> dz{-2.0 * gamma * u, 2.0 * gamma};
    return {z, dz};
}

// g_{lambda,mu}(u) = e^{z(u) t} z(u)^{-mu} e^{-|x| z(u)^{-lambda}} z'(u),
// all complex powers on the principal branch.  For real mu the identity
// g(-u) = -conj(g(u)) holds up to roundoff.
inline std::complex<double> integrand(double u, const WrightOrder& order, const EvalPoint& point,
                                      double gamma) {
    if (gamma * point.t > 700.0)
        throw domain_error("integrand: gamma*t exceeds the double exponent range");
    auto [z, dz] = contour_point(u, gamma);
    std::complex<double> lz = std::log(z);
    std::complex<double> value = std::exp(z * point.t - order.mu * lz -
                                          std::abs(point.x) * std::exp(-order.lambda * lz));
    return value * dz;
}

}  // namespace wright
