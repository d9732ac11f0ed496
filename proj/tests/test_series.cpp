#include <doctest.h>

#include <cmath>
#include <complex>

#include "wright/closed_forms.hpp"
#include "wright/series.hpp"

using wright::MainardiKind;
using wright::SeriesResult;
using wright::WrightOrder;
using wright::WrightSeries;
using wright::wright_series;

namespace {
constexpr double kTol = 1e-20;
constexpr int kMaxTerms = 1000;
}  // namespace

TEST_CASE("gaussian special case M_1/2(1) = exp(-1/4)/sqrt(pi)") {
    SeriesResult r = wright_series({-0.5, {0.5, 0.0}}, -1.0, kTol, kMaxTerms);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(0.4393912894677224).epsilon(1e-15));
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("z = 0 keeps only the n = 0 term") {
    SeriesResult r = wright_series({-0.3, {1.0, 0.0}}, 0.0, kTol, kMaxTerms);
    CHECK(r.value.real() == doctest::Approx(1.0));
    CHECK(r.terms_used == 1);
    CHECK(r.converged);
}

TEST_CASE("W_{-1/2,1}(-1) = erfc(1/2)") {
    SeriesResult r = wright_series({-0.5, {1.0, 0.0}}, -1.0, kTol, kMaxTerms);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(0.47950012218695346).epsilon(1e-15));
    CHECK(r.value.real() == doctest::Approx(std::erfc(0.5)).epsilon(1e-14));
}

TEST_CASE("external anchors from 80-digit summation") {
    CHECK(wright_series({-0.25, {0.75, 0.0}}, -1.0, kTol, kMaxTerms).value.real() ==
          doctest::Approx(0.38333541657068354).epsilon(1e-15));
    CHECK(wright_series({-0.75, {0.25, 0.0}}, -2.0, kTol, kMaxTerms).value.real() ==
          doctest::Approx(0.22514007014896750).epsilon(1e-15));
    CHECK(wright_series({-0.3, {0.7, 0.0}}, -1.0, kTol, kMaxTerms).value.real() ==
          doctest::Approx(0.39052334188638717).epsilon(1e-15));

    SeriesResult c = wright_series({-0.5, {0.5, 1.0}}, -2.0, kTol, kMaxTerms);
    CHECK(c.value.real() == doctest::Approx(0.28791248974735445).epsilon(1e-14));
    CHECK(c.value.imag() == doctest::Approx(-0.15119936516621942).epsilon(1e-14));
}

TEST_CASE("alternating structure: lambda=-1/2, mu=1 kills even n >= 2") {
    WrightSeries series(-0.5, {1.0, 0.0}, 16);
    for (int n = 2; n < 16; n += 2) {
        CHECK(series.coefficient(n) == std::complex<double>(0.0, 0.0));
    }
    for (int n = 1; n < 16; n += 2) {
        CHECK(series.coefficient(n) != std::complex<double>(0.0, 0.0));
    }
}

TEST_CASE("series agrees with the closed forms") {
    // M_1/2 and M_1/3 across |x| <= 3
    for (double x = 0.0; x <= 3.0; x += 0.25) {
        double m12 = wright_series({-0.5, {0.5, 0.0}}, -x, kTol, kMaxTerms).value.real();
        CHECK(std::fabs(m12 - wright::closed_form_mainardi(MainardiKind::gauss_half, x)) <
              1e-11 * std::fabs(m12));
        double third = 1.0 / 3.0;
        double m13 = wright_series({-third, {1.0 - third, 0.0}}, -x, kTol, kMaxTerms).value.real();
        CHECK(std::fabs(m13 - wright::closed_form_mainardi(MainardiKind::airy_third, x)) <
              1e-11 * std::fabs(m13));
    }
    // M_nu -> M_0 = exp(-x) as nu -> 0 carries a first-order deviation
    // ~ gammaE * nu * |1-x| e^{-x}, so the check at nu = 1e-6 is loose
    for (double x = 0.0; x <= 3.0; x += 0.5) {
        double nu = 1e-6;
        double m0 = wright_series({-nu, {1.0 - nu, 0.0}}, -x, kTol, kMaxTerms).value.real();
        CHECK(std::fabs(m0 - std::exp(-x)) < 5e-6 * std::exp(-x) + 1e-12);
    }
}

TEST_CASE("degenerate lambda = 0 reduces to exp(z)/Gamma(mu)") {
    SeriesResult r = wright_series({0.0, {1.0, 0.0}}, -2.5, kTol, kMaxTerms);
    CHECK(r.value.real() == doctest::Approx(std::exp(-2.5)).epsilon(1e-15));
}

TEST_CASE("non-convergence is flagged, not thrown") {
    // lambda near -1 with large |z|: the cancellation hump exceeds any
    // fixed precision; the flag must come back unset
    SeriesResult r = wright_series({-0.9, {0.5, 0.0}}, -5.0, kTol, kMaxTerms);
    CHECK_FALSE(r.converged);
    CHECK(r.tail_bound > kTol);

    SeriesResult ok = wright_series({-0.9, {0.5, 0.0}}, -1.0, kTol, 2000);
    CHECK(ok.converged);
}

TEST_CASE("result metadata invariants") {
    SeriesResult r = wright_series({-0.4, {1.2, 0.0}}, -2.0, kTol, 300);
    CHECK(r.terms_used <= 300);
    CHECK(r.tail_bound >= 0.0);
    CHECK(r.converged);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS((void)wright_series({-1.5, {1.0, 0.0}}, -1.0, kTol, 100),
                    wright::domain_error);
    CHECK_THROWS_AS((void)wright_series({-0.5, {1.0, 0.0}}, -1.0, -1.0, 100),
                    wright::domain_error);
    CHECK_THROWS_AS((void)wright_series({-0.5, {1.0, 0.0}}, -1.0, kTol, 0), wright::domain_error);
}
