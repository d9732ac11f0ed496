#include "wright/airy.hpp"

#include <cmath>

#include "wright/dd.hpp"
#include "wright/types.hpp"

namespace wright {

namespace {
// 3^{-2/3}/Gamma(2/3) and 3^{-1/3}/Gamma(1/3)
constexpr dd::dd kAiryC1{0.3550280538878172, 2.05233632436212e-17};
constexpr dd::dd kAiryC2{0.2588194037928068, -2.522243111610832e-17};
}  // namespace

double airy_ai(double x) {
    if (!(std::fabs(x) <= 8.0))
        throw range_error("airy_ai: |x| must be <= 8 (ascending series validation range)");

    dd::dd x3 = dd::mul(dd::mul(dd::from_double(x), x), x);

    // f(x) = sum 3^k (1/3)_k x^{3k} / (3k)!   term ratio x^3/((3k+2)(3k+3))
    // g(x) = sum 3^k (2/3)_k x^{3k+1}/(3k+1)! term ratio x^3/((3k+3)(3k+4))
    dd::dd f_term = dd::from_double(1.0);
    dd::dd f_sum = f_term;
    dd::dd g_term = dd::from_double(x);
    dd::dd g_sum = g_term;
    for (int k = 0; k < 80; ++k) {
        f_term = dd::div(dd::mul(f_term, x3), static_cast<double>((3 * k + 2) * (3 * k + 3)));
        g_term = dd::div(dd::mul(g_term, x3), static_cast<double>((3 * k + 3) * (3 * k + 4)));
        f_sum = dd::add(f_sum, f_term);
        g_sum = dd::add(g_sum, g_term);
        if (std::fabs(f_term.hi) < 1e-18 && std::fabs(g_term.hi) < 1e-18) break;
    }
    return dd::to_double(dd::sub(dd::mul(kAiryC1, f_sum), dd::mul(kAiryC2, g_sum)));
}

}  // namespace wright
