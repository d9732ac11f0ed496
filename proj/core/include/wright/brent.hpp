#pragma once

#include <functional>

namespace wright {

struct BrentResult {
    double x = 0.0;
    double fx = 0.0;
};

// Bounded scalar minimization on (a,b) by golden-section search with
// parabolic interpolation (Brent's localmin).  NaN objective values are
// treated as +inf so searches may safely brush against a domain edge.
// Throws iteration_limit_error after max_iter iterations without meeting
// xtol.
BrentResult brent_min(const std::function<double(double)>& f, double a, double b, double xtol,
                      int max_iter = 200);

}  // namespace wright
