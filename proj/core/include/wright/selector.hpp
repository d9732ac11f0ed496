#pragma once

#include <complex>

#include "wright/types.hpp"

namespace wright {

// Error-balanced contour parameters for evaluating f_{lambda,mu}(t;x) to the
// target accuracy of `tol`.  Branches on Re(mu):
//
//   Re(mu) < 2: xi = 2, N = floor(sqrt(2 ell ell_tol)/pi), c reported as 1
//   Re(mu) > 2: c minimizes N(c) on (0,1) (Brent), N = ceil(N(c))
//   Re(mu) = 2: c minimizes N(c) on (1 - 1/sqrt(ell - ell_tol) + ulp, 1),
//               N = ceil(N(c)); requires ell > ell_tol
//
// and in every branch h = (2 + xi c) ell / (pi N^2),
// gamma = pi^2 N^2 / ((2 + xi c)^2 t ell), so gamma*t is independent of t.
ContourParams select_contour(std::complex<double> mu, double t, const ToleranceProfile& tol);

// h and gamma for a prescribed node count, keeping c and xi fixed.  Used to
// study convergence below the selected N.
ContourParams rebalanced_contour(int n_nodes, double c, double xi, double t,
                                 const ToleranceProfile& tol);

}  // namespace wright
