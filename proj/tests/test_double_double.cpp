#include <doctest.h>

#include <cmath>

#include "wright/dd.hpp"

using namespace wright::dd;

namespace {

// |got - (hi + lo)| relative to hi
double dd_rel_err(const dd& got, double hi, double lo) {
    return std::fabs((got.hi - hi) + (got.lo - lo)) / std::fabs(hi);
}

}  // namespace

TEST_CASE("two_sum and two_prod are error free") {
    dd s = two_sum(1e16, 1.0);
    CHECK(s.hi + s.lo == doctest::Approx(1e16 + 1.0));
    CHECK(s.lo != 0.0);  // the 1.0 is not representable in the rounded sum

    dd p = two_prod(1.0 + 1e-8, 1.0 - 1e-8);
    CHECK(p.hi == (1.0 + 1e-8) * (1.0 - 1e-8));
}

TEST_CASE("division recovers exact rationals") {
    dd t = div(from_double(1.0), from_double(3.0));
    CHECK(t.hi == 0.33333333333333331);
    CHECK(t.lo == doctest::Approx(1.8503717077085942e-17).epsilon(1e-12));
}

TEST_CASE("transcendental kernels reach double-double accuracy") {
    // references from 60-digit evaluation at the binary argument
    CHECK(dd_rel_err(exp_dd(from_double(1.0)), 2.718281828459045, 1.4456468917292502e-16) < 1e-30);
    CHECK(dd_rel_err(ln_dd(from_double(2.0)), 0.6931471805599453, 2.3190468138462996e-17) < 1e-30);
    CHECK(dd_rel_err(sqrt_dd(from_double(2.0)), 1.4142135623730951, -9.667293313452913e-17) < 1e-30);
    CHECK(dd_rel_err(sinpi_dd(div(from_double(1.0), 3.0)), 0.8660254037844386,
                     5.0175421109034514e-17) < 1e-30);
    CHECK(dd_rel_err(atan_dd(from_double(0.7)), 0.6107259643892086, 2.2418914462967458e-17) <
          1e-30);
}

TEST_CASE("sinpi vanishes exactly at integers") {
    CHECK(sinpi_dd(from_double(-4.0)).hi == 0.0);
    CHECK(sinpi_dd(from_double(-4.0)).lo == 0.0);
    CHECK(sinpi_dd(from_double(117.0)).hi == 0.0);
}

TEST_CASE("large exp range reduction") {
    dd e = exp_dd(from_double(200.0));
    CHECK(e.hi == doctest::Approx(7.225973768125749e86).epsilon(1e-14));
    CHECK(exp_dd(from_double(-800.0)).hi == 0.0);
}

TEST_CASE("complex log-gamma matches high-precision references") {
    ddc lg = loggamma_ddc({from_double(26.0), {}});
    CHECK(dd_rel_err(lg.re, 58.00360522298052, 2.0311680775630077e-15) < 1e-29);

    lg = loggamma_ddc({from_double(3.75), {}});
    CHECK(dd_rel_err(lg.re, 1.486815578593417, 1.0227253469213974e-16) < 1e-29);

    lg = loggamma_ddc({from_double(10.3), from_double(2.0)});
    CHECK(dd_rel_err(lg.re, 13.27951813053673, 7.229468468820093e-16) < 1e-29);
    CHECK(dd_rel_err(lg.im, 4.579309395164289, 1.5949775521600347e-16) < 1e-29);

    lg = loggamma_ddc({from_double(0.6), from_double(5.0)});
    CHECK(dd_rel_err(lg.re, -6.774260434473479, -9.163799193890541e-17) < 1e-29);
    CHECK(dd_rel_err(lg.im, 3.2116189131635893, -4.446415401926347e-17) < 1e-29);

    lg = loggamma_ddc({from_double(600.5), from_double(-3.0)});
    CHECK(dd_rel_err(lg.re, 3239.069162251445, 5.634084642431178e-15) < 1e-28);
    CHECK(dd_rel_err(lg.im, -19.190801812768065, 1.5170165493190105e-15) < 1e-28);
}

TEST_CASE("scaled reciprocal gamma") {
    ddc rg = to_ddc(rgamma_scaled({from_double(-0.5), {}}));
    CHECK(rg.re.hi == doctest::Approx(-0.28209479177387814).epsilon(1e-15));
    CHECK(rg.im.hi == 0.0);

    rg = to_ddc(rgamma_scaled({from_double(3.0), from_double(2.0)}));
    CHECK(rg.re.hi == doctest::Approx(-0.45024525741693705).epsilon(1e-14));
    CHECK(rg.im.hi == doctest::Approx(-0.92876385186421007).epsilon(1e-14));

    // poles of Gamma give an exact zero
    rg = to_ddc(rgamma_scaled({from_double(-3.0), {}}));
    CHECK(rg.re.hi == 0.0);
    CHECK(rg.im.hi == 0.0);

    // magnitudes far outside the double range survive in scaled form
    sddc s = rgamma_scaled({from_double(-355.4), {}});
    CHECK(s.e2 > 2000);
    CHECK(std::isfinite(s.m.re.hi));
}

TEST_CASE("scaled arithmetic round trip") {
    sddc a = scaled_from({from_double(3.0), from_double(-4.0)});
    sddc b = scaled_from({from_double(-2.0), from_double(1.0)});
    ddc prod = to_ddc(mul(a, b));
    CHECK(prod.re.hi == doctest::Approx(-2.0));
    CHECK(prod.im.hi == doctest::Approx(11.0));

    // overflowing the double range saturates, far undershoot flushes to zero
    sddc big{{from_double(1.0), {}}, 2000};
    CHECK(std::isinf(to_ddc(big).re.hi));
    sddc tiny{{from_double(1.0), {}}, -2000};
    CHECK(to_ddc(tiny).re.hi == 0.0);
}
