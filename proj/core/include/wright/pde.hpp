#pragma once

// Closed-form Green's-function solutions of three time-fractional evolution
// problems on the line, with the Wright function as kernel evaluator:
// the Cauchy problem for the fractional diffusion-wave equation, the
// signalling problem on the half line, and fractional heat conduction in
// two semi-infinite rods under perfect thermal contact.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wright/grid.hpp"
#include "wright/types.hpp"

namespace wright::pde {

// G_C(x,t;nu) = f_{-nu,1-nu}(t; |x|/sqrt(D)) / (2 sqrt(D))
//             = t^{-nu} M_nu(|x| t^{-nu}/sqrt(D)) / (2 sqrt(D)), even in x.
double cauchy_green(double nu, double D, double x, double t);

// Time primitive of G_C, needed for the initial-velocity term in the wave
// regime: dividing the Laplace image by s shifts mu by one, so
// G_C^{(1)} = f_{-nu,2-nu}(t; |x|/sqrt(D)) / (2 sqrt(D)).  nu in (1/2,1].
double cauchy_green_primitive(double nu, double D, double x, double t);

struct CauchyProblem {
    double nu = 0.5;                 // fractional half-order, (0,1]
    double diffusivity = 1.0;        // D
    GridFunction g;                  // initial datum
    std::optional<GridFunction> p;   // initial velocity, required iff nu > 1/2
};

struct CauchySolution {
    GridFunction u;
    // kernel magnitude at the window edges above 1e-12 of its max: the
    // periodic wrap-around of the circular convolution is then the dominant
    // error source
    bool decay_warning = false;
};

// u = dx * periodicconv(g, G_C) (+ dx * periodicconv(p, G_C^{(1)}) for
// nu > 1/2), circular FFT convolution with the half-window shift.
CauchySolution cauchy_solve(const CauchyProblem& problem, double t);

// G_S(x,t;nu) = f_{-nu,0}(t; x/sqrt(D)) = t^{-1} F_nu(x t^{-nu}/sqrt(D)),
// x > 0.  Signalling restricted to the diffusion regime nu in (0,1/2].
double signalling_green(double nu, double D, double x, double t);

struct SignallingSolution {
    std::vector<double> values;
    bool tolerance_met = true;  // false: the panel cap was hit at some t
};

// u(x,t) = int_0^t G_S(x,tau) h(t-tau) dtau per entry of t_grid, by adaptive
// trapezoid bisection; the integrand is extended by 0 at tau = 0.
SignallingSolution signalling_solve(const std::function<double(double)>& h, double nu, double D,
                                    double x, std::span<const double> t_grid, double quad_tol);

// Two semi-infinite rods joined at x = 0 with perfect thermal contact,
// initial pulse p0 delta(x - rho) in the right rod.
struct TwoRodConfig {
    double p0 = 1.0;
    double rho = 0.5;
    double a1 = 3.0;
    double a2 = 1.0;
    double k1 = 2.0;
    double k2 = 6.0;
    double alpha = 1.0;
    double eta = 0.0;  // k1 sqrt(a2) / (k2 sqrt(a1)), derived

    static TwoRodConfig make(double p0, double rho, double a1, double a2, double k1, double k2,
                             double alpha);
};

// Temperature at (x,t); x >= 0 evaluates T1, x <= 0 evaluates T2 (they agree
// at the contact point).  alpha = 2 is handled by clamping the Wright order
// to the admissible boundary.
double tworod_solve(const TwoRodConfig& config, double x, double t);

}  // namespace wright::pde
