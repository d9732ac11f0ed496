#pragma once

#include <functional>

namespace wright {

// Adaptive Simpson quadrature with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 48);

struct TrapezoidResult {
    double value = 0.0;
    bool tolerance_met = true;
    int panels_used = 0;
};

// Adaptive composite trapezoid: panels are bisected until the two-level
// Richardson estimate of the panel error drops below its share of tol.
// Stops refining once max_panels panels exist and reports tolerance_met =
// false with the best estimate.
TrapezoidResult adaptive_trapezoid(const std::function<double(double)>& f, double a, double b,
                                   double tol, int max_panels = 1 << 14);

}  // namespace wright
