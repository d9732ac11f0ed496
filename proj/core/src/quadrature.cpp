#include "wright/quadrature.hpp"

#include <cmath>
#include <queue>

#include "wright/types.hpp"

namespace wright {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fb, double fm, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double refined = left + right;
    double err = (refined - whole) / 15.0;
    if (depth <= 0 || std::fabs(err) <= tol) return refined + err;
    return simpson_step(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (!(tol > 0.0)) throw domain_error("adaptive_simpson: tol must be > 0");
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fb, fm, whole, tol, max_depth);
}

namespace {

struct Panel {
    double a, b;
    double fa, fb, fm;
    double value;  // Richardson-corrected fine trapezoid
    double err;    // two-level estimate |fine - coarse|/3

    bool operator<(const Panel& other) const { return err < other.err; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double fa,
                 double fb) {
    Panel p{a, b, fa, fb, 0.0, 0.0, 0.0};
    p.fm = f(0.5 * (a + b));
    double coarse = 0.5 * (b - a) * (fa + fb);
    double fine = 0.25 * (b - a) * (fa + 2.0 * p.fm + fb);
    p.err = std::fabs(fine - coarse) / 3.0;
    p.value = fine + (fine - coarse) / 3.0;
    return p;
}

}  // namespace

TrapezoidResult adaptive_trapezoid(const std::function<double(double)>& f, double a, double b,
                                   double tol, int max_panels) {
    if (!(tol > 0.0)) throw domain_error("adaptive_trapezoid: tol must be > 0");
    if (!(a <= b)) throw domain_error("adaptive_trapezoid: requires a <= b");
    TrapezoidResult out;
    if (a == b) return out;

    // worst-panel-first bisection: the error budget lands where it is needed
    std::priority_queue<Panel> queue;
    queue.push(make_panel(f, a, b, f(a), f(b)));
    double err_sum = queue.top().err;
    while (err_sum > tol && static_cast<int>(queue.size()) < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        err_sum -= worst.err;
        double m = 0.5 * (worst.a + worst.b);
        Panel left = make_panel(f, worst.a, m, worst.fa, worst.fm);
        Panel right = make_panel(f, m, worst.b, worst.fm, worst.fb);
        err_sum += left.err + right.err;
        queue.push(left);
        queue.push(right);
    }
    out.tolerance_met = err_sum <= tol;
    out.panels_used = static_cast<int>(queue.size());
    while (!queue.empty()) {
        out.value += queue.top().value;
        queue.pop();
    }
    return out;
}

}  // namespace wright
