#pragma once

#include <cfloat>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace wright {

class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class range_error : public std::range_error {
  public:
    using std::range_error::range_error;
};

// requested accuracy cannot be met by the working precision
class infeasible_tolerance_error : public domain_error {
  public:
    using domain_error::domain_error;
};

class iteration_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Order pair (lambda, mu) of W_{lambda,mu}.  Only the second kind
// lambda in (-1,0) is supported, with guard bands at both endpoints;
// lambda == 0 is additionally accepted as the degenerate diffusion
// limit W_{0,mu}(z) = e^z/Gamma(mu), which the contour method handles
// exactly and which serves as the M_0 reference case.
struct WrightOrder {
    double lambda = -0.5;
    std::complex<double> mu{1.0, 0.0};
};

inline constexpr double kLambdaMin = -1.0 + 1e-8;
inline constexpr double kLambdaMax = -1e-8;

inline bool order_is_valid(const WrightOrder& o) {
    if (!std::isfinite(o.lambda) || !std::isfinite(o.mu.real()) || !std::isfinite(o.mu.imag()))
        return false;
    return o.lambda == 0.0 || (o.lambda >= kLambdaMin && o.lambda <= kLambdaMax);
}

inline void require_valid_order(const WrightOrder& o) {
    if (!order_is_valid(o))
        throw domain_error("wright: lambda must lie in [" + std::to_string(kLambdaMin) + ", " +
                           std::to_string(kLambdaMax) + "] (or be exactly 0) and mu must be finite");
}

// Evaluation point of f_{lambda,mu}(t;x); only |x| enters.
struct EvalPoint {
    double t = 1.0;
    double x = 0.0;
};

inline void require_valid_point(const EvalPoint& p) {
    if (!(p.t > 0.0) || !std::isfinite(p.t))
        throw domain_error("wright: t must be strictly positive");
    if (!std::isfinite(p.x)) throw domain_error("wright: x must be finite");
}

// Working precision eps_machine, target accuracy eps_target and their
// negated logs ell = -ln(eps_machine), ell_tol = -ln(eps_target).
struct ToleranceProfile {
    double eps_machine = DBL_EPSILON;
    double eps_target = 1e-15;
    double ell = 0.0;
    double ell_tol = 0.0;

    ToleranceProfile(double eps_m, double eps_t)
        : eps_machine(eps_m), eps_target(eps_t), ell(-std::log(eps_m)), ell_tol(-std::log(eps_t)) {
        if (!(eps_machine > 0.0) || !(eps_machine <= eps_target) || !(eps_target < 1.0))
            throw domain_error("wright: tolerances must satisfy 0 < eps_machine <= eps_target < 1");
    }

    static ToleranceProfile defaults() { return {DBL_EPSILON, 1e-15}; }
};

// Trapezoidal contour configuration produced by the selector.
struct ContourParams {
    int n_nodes = 0;      // N
    double step = 0.0;    // h
    double gamma = 0.0;   // parabola scale, 1/time
    double c = 1.0;       // upper strip half-width
    double xi = 2.0;      // correction factor
};

struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    ContourParams contour;
    double est_roundoff = 0.0;       // eps_machine * exp(gamma t)
    bool accuracy_warning = false;   // |Im mu| > 5: roundoff bound carries e^{2 pi Im(mu)}
};

}  // namespace wright
