#include "wright/dd.hpp"

#include <limits>

namespace wright::dd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// B_{2k}/(2k(2k-1)), k = 1..16
constexpr dd kStirling[16] = {
    {0.08333333333333333, 4.625929269271485e-18},
    {-0.002777777777777778, 1.0601087908747154e-19},
    {0.0007936507936507937, 6.883823317368282e-22},
    {-0.0005952380952380953, 5.36938218754726e-20},
    {0.0008417508417508417, 3.6870174889237694e-20},
    {-0.0019175269175269176, 1.0675702776872475e-19},
    {0.00641025641025641, 2.2240044563805217e-19},
    {-0.029550653594771242, 4.861760957508855e-19},
    {0.17964437236883057, -6.401600482710946e-19},
    {-1.3924322169059011, 1.5837056989230303e-17},
    {13.402864044168393, -6.154114101993966e-16},
    {-156.84828462600203, 9.391823141715389e-15},
    {2193.1033333333335, -1.3339255626002948e-13},
    {-36108.77125372499, 5.897583353514365e-13},
    {691472.268851313, 2.5585296305158e-11},
    {-15238221.539407415, -8.76774522490625e-10},
};

// sin(pi r) for |r| <= 0.5
dd sinpi_kernel(const dd& r) {
    dd t = mul(kPi, r);
    dd t2 = mul(t, t);
    dd term = t;
    dd sum = t;
    for (int k = 1; k <= 18; ++k) {
        term = mul(term, t2);
        term = div(term, -static_cast<double>(2 * k * (2 * k + 1)));
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-40 * std::fabs(sum.hi)) break;
    }
    return sum;
}

// cos(pi r) for |r| <= 0.5
dd cospi_kernel(const dd& r) {
    dd t = mul(kPi, r);
    dd t2 = mul(t, t);
    dd term = from_double(1.0);
    dd sum = term;
    for (int k = 1; k <= 19; ++k) {
        term = mul(term, t2);
        term = div(term, -static_cast<double>((2 * k - 1) * 2 * k));
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-40 * std::fabs(sum.hi)) break;
    }
    return sum;
}

}  // namespace

dd sqrt_dd(const dd& x) {
    if (x.hi == 0.0) return {0.0, 0.0};
    dd r = from_double(std::sqrt(x.hi));
    // one Newton step doubles the correct digits
    r = mul(add(r, div(x, r)), 0.5);
    return r;
}

dd exp_dd(const dd& x) {
    if (x.hi > 709.0) return {kInf, 0.0};
    if (x.hi < -709.0) return {0.0, 0.0};
    double k = std::nearbyint(x.hi / kLn2.hi);
    dd r = sub(x, mul(kLn2, k));
    dd term = r;
    dd sum = add(r, 1.0);
    for (int i = 2; i <= 26; ++i) {
        term = div(mul(term, r), static_cast<double>(i));
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-40) break;
    }
    return ldexp_dd(sum, static_cast<int>(k));
}

dd ln_dd(const dd& x) {
    if (x.hi <= 0.0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
    dd y = from_double(std::log(x.hi));
    for (int i = 0; i < 2; ++i) {
        dd e = exp_dd(neg(y));
        y = add(y, sub(mul(x, e), 1.0));
    }
    return y;
}

dd sinpi_dd(const dd& x) {
    double k = std::nearbyint(x.hi);
    dd r = sub(x, k);
    dd s = sinpi_kernel(r);
    bool odd = std::fmod(std::fabs(k), 2.0) == 1.0;
    return odd ? neg(s) : s;
}

dd cospi_dd(const dd& x) {
    double k = std::nearbyint(x.hi);
    dd r = sub(x, k);
    dd c = cospi_kernel(r);
    bool odd = std::fmod(std::fabs(k), 2.0) == 1.0;
    return odd ? neg(c) : c;
}

dd sin_dd(const dd& x) { return sinpi_dd(div(x, kPi)); }
dd cos_dd(const dd& x) { return cospi_dd(div(x, kPi)); }

dd sinh_dd(const dd& x) {
    if (std::fabs(x.hi) < 0.5) {
        dd x2 = mul(x, x);
        dd term = x;
        dd sum = x;
        for (int k = 1; k <= 12; ++k) {
            term = div(mul(term, x2), static_cast<double>(2 * k * (2 * k + 1)));
            sum = add(sum, term);
        }
        return sum;
    }
    dd e = exp_dd(x);
    return mul(sub(e, div(from_double(1.0), e)), 0.5);
}

dd cosh_dd(const dd& x) {
    dd e = exp_dd(x);
    return mul(add(e, div(from_double(1.0), e)), 0.5);
}

dd atan_dd(const dd& x) {
    if (x.hi == 0.0 && x.lo == 0.0) return {0.0, 0.0};
    bool negv = x.hi < 0.0;
    dd a = fabs_dd(x);
    bool invert = a.hi > 1.0;
    if (invert) a = div(from_double(1.0), a);
    int halvings = 0;
    while (a.hi > 0.25) {
        a = div(a, add(sqrt_dd(add(mul(a, a), 1.0)), 1.0));
        ++halvings;
    }
    dd a2 = mul(a, a);
    dd p = a;
    dd sum = a;
    for (int k = 1; k <= 28; ++k) {
        p = mul(p, neg(a2));
        dd term = div(p, static_cast<double>(2 * k + 1));
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-40) break;
    }
    sum = ldexp_dd(sum, halvings);
    if (invert) sum = sub(kHalfPi, sum);
    return negv ? neg(sum) : sum;
}

dd atan2_dd(const dd& y, const dd& x) {
    if (x.hi > 0.0) return atan_dd(div(y, x));
    if (x.hi == 0.0 && x.lo == 0.0) {
        if (y.hi > 0.0) return kHalfPi;
        if (y.hi < 0.0) return neg(kHalfPi);
        return {0.0, 0.0};
    }
    dd base = atan_dd(div(y, x));
    return (y.hi >= 0.0) ? add(base, kPi) : sub(base, kPi);
}

ddc cexp_ddc(const ddc& z) {
    dd e = exp_dd(z.re);
    return {mul(e, cos_dd(z.im)), mul(e, sin_dd(z.im))};
}

ddc clog_ddc(const ddc& z) {
    dd r2 = add(mul(z.re, z.re), mul(z.im, z.im));
    return {mul(ln_dd(r2), 0.5), atan2_dd(z.im, z.re)};
}

ddc sinpi_ddc(const ddc& z) {
    if (z.im.hi == 0.0 && z.im.lo == 0.0) {
        return {sinpi_dd(z.re), {0.0, 0.0}};
    }
    dd pb = mul(kPi, z.im);
    return {mul(sinpi_dd(z.re), cosh_dd(pb)), mul(cospi_dd(z.re), sinh_dd(pb))};
}

ddc loggamma_ddc(const ddc& z0) {
    ddc z = z0;
    ddc lnacc{{0.0, 0.0}, {0.0, 0.0}};
    while (z.re.hi < 26.0) {
        lnacc = add(lnacc, clog_ddc(z));
        z.re = add(z.re, 1.0);
    }
    ddc w = div(ddc{from_double(1.0), from_double(0.0)}, z);
    ddc w2 = mul(w, w);
    ddc s{kStirling[15], {0.0, 0.0}};
    for (int k = 14; k >= 0; --k) {
        s = mul(s, w2);
        s.re = add(s.re, kStirling[k]);
    }
    s = mul(s, w);
    ddc lz = clog_ddc(z);
    ddc half{from_double(0.5), from_double(0.0)};
    ddc r = mul(sub(z, half), lz);
    r.re = add(sub(r.re, z.re), kHalfLn2Pi);
    r.im = sub(r.im, z.im);
    r = add(r, s);
    return sub(r, lnacc);
}

void normalize(sddc& x) {
    double a = std::max(std::fabs(x.m.re.hi), std::fabs(x.m.im.hi));
    if (a == 0.0 || !std::isfinite(a)) {
        x.e2 = 0;
        return;
    }
    int ex = 0;
    std::frexp(a, &ex);
    if (ex != 0) {
        x.m.re = ldexp_dd(x.m.re, -ex);
        x.m.im = ldexp_dd(x.m.im, -ex);
        x.e2 += ex;
    }
}

sddc scaled_from(const ddc& z) {
    sddc r{z, 0};
    normalize(r);
    return r;
}

sddc mul(const sddc& a, const sddc& b) {
    sddc r{mul(a.m, b.m), a.e2 + b.e2};
    normalize(r);
    return r;
}

sddc mul(const sddc& a, const ddc& b) {
    sddc r{mul(a.m, b), a.e2};
    normalize(r);
    return r;
}

sddc div(const sddc& a, const sddc& b) {
    sddc r{div(a.m, b.m), a.e2 - b.e2};
    normalize(r);
    return r;
}

sddc div(const sddc& a, const dd& b) {
    sddc r{{div(a.m.re, b), div(a.m.im, b)}, a.e2};
    normalize(r);
    return r;
}

sddc cexp_scaled(const ddc& z) {
    double k = std::nearbyint(z.re.hi / kLn2.hi);
    dd r = sub(z.re, mul(kLn2, k));
    dd mag = exp_dd(r);
    sddc res{{mul(mag, cos_dd(z.im)), mul(mag, sin_dd(z.im))}, static_cast<long>(k)};
    normalize(res);
    return res;
}

ddc to_ddc(const sddc& x) {
    if (x.e2 > 1020) {
        double s = x.m.re.hi >= 0 ? kInf : -kInf;
        double t = x.m.im.hi >= 0 ? kInf : -kInf;
        if (x.m.re.hi == 0) s = 0;
        if (x.m.im.hi == 0) t = 0;
        return {{s, 0.0}, {t, 0.0}};
    }
    if (x.e2 < -1070) return {{0.0, 0.0}, {0.0, 0.0}};
    int k = static_cast<int>(x.e2);
    return {ldexp_dd(x.m.re, k), ldexp_dd(x.m.im, k)};
}

sddc rgamma_scaled(const ddc& w) {
    if (w.re.hi >= 0.5) {
        return cexp_scaled(neg(loggamma_ddc(w)));
    }
    // reflection: 1/Gamma(w) = sin(pi w) Gamma(1-w) / pi
    ddc s = sinpi_ddc(w);
    if (s.re.hi == 0.0 && s.re.lo == 0.0 && s.im.hi == 0.0 && s.im.lo == 0.0) {
        return sddc{};  // pole of Gamma, 1/Gamma vanishes
    }
    ddc one{from_double(1.0), from_double(0.0)};
    ddc l = loggamma_ddc(sub(one, w));
    sddc g = cexp_scaled(l);
    g = mul(g, s);
    g = div(g, kPi);
    return g;
}

}  // namespace wright::dd
