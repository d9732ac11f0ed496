#pragma once

// Double-double arithmetic: an unevaluated sum of two doubles giving roughly
// 32 significant decimal digits.  Used by the series oracle, where terms of a
// badly cancelling alternating sum have to be carried well beyond working
// precision.  The scaled complex type sddc additionally keeps a separate
// power-of-two exponent so gamma-function magnitudes far outside the double
// range stay representable.

#include <cmath>
#include <complex>

namespace wright::dd {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd add(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    dd r = quick_two_sum(s.hi, s.lo + t.hi);
    return quick_two_sum(r.hi, r.lo + t.lo);
}

inline dd add(const dd& a, double b) {
    dd s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline dd neg(const dd& a) { return {-a.hi, -a.lo}; }
inline dd sub(const dd& a, const dd& b) { return add(a, neg(b)); }
inline dd sub(const dd& a, double b) { return add(a, -b); }

inline dd mul(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
}

inline dd mul(const dd& a, double b) {
    dd p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd div(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return add(q, q3);
}

inline dd div(const dd& a, double b) { return div(a, dd{b, 0.0}); }

inline dd operator+(const dd& a, const dd& b) { return add(a, b); }
inline dd operator+(const dd& a, double b) { return add(a, b); }
inline dd operator-(const dd& a, const dd& b) { return sub(a, b); }
inline dd operator-(const dd& a, double b) { return sub(a, b); }
inline dd operator-(const dd& a) { return neg(a); }
inline dd operator*(const dd& a, const dd& b) { return mul(a, b); }
inline dd operator*(const dd& a, double b) { return mul(a, b); }
inline dd operator/(const dd& a, const dd& b) { return div(a, b); }
inline dd operator/(const dd& a, double b) { return div(a, b); }

inline double to_double(const dd& a) { return a.hi; }
inline dd from_double(double x) { return {x, 0.0}; }
inline dd ldexp_dd(const dd& a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }
inline dd fabs_dd(const dd& a) { return a.hi < 0.0 ? neg(a) : a; }

inline constexpr dd kPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd kTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd kLn2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd kHalfLn2Pi{0.9189385332046728, -3.8782941580672414e-17};
inline constexpr dd kHalfPi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr dd kE{2.718281828459045, 1.4456468917292502e-16};

dd sqrt_dd(const dd& x);
dd exp_dd(const dd& x);
dd ln_dd(const dd& x);
dd sinpi_dd(const dd& x);
dd cospi_dd(const dd& x);
dd sin_dd(const dd& x);
dd cos_dd(const dd& x);
dd sinh_dd(const dd& x);
dd cosh_dd(const dd& x);
dd atan_dd(const dd& x);
dd atan2_dd(const dd& y, const dd& x);

// ---- complex double-double ----

struct ddc {
    dd re;
    dd im;
};

inline ddc from_complex(const std::complex<double>& z) {
    return {from_double(z.real()), from_double(z.imag())};
}
inline std::complex<double> to_complex(const ddc& z) { return {z.re.hi, z.im.hi}; }

inline ddc add(const ddc& a, const ddc& b) { return {add(a.re, b.re), add(a.im, b.im)}; }
inline ddc sub(const ddc& a, const ddc& b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }
inline ddc neg(const ddc& a) { return {neg(a.re), neg(a.im)}; }
inline ddc conj(const ddc& a) { return {a.re, neg(a.im)}; }

inline ddc mul(const ddc& a, const ddc& b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)),
            add(mul(a.re, b.im), mul(a.im, b.re))};
}
inline ddc mul(const ddc& a, const dd& b) { return {mul(a.re, b), mul(a.im, b)}; }
inline ddc mul(const ddc& a, double b) { return {mul(a.re, b), mul(a.im, b)}; }

inline ddc div(const ddc& a, const ddc& b) {
    dd den = add(mul(b.re, b.re), mul(b.im, b.im));
    dd re = add(mul(a.re, b.re), mul(a.im, b.im));
    dd im = sub(mul(a.im, b.re), mul(a.re, b.im));
    return {div(re, den), div(im, den)};
}
inline ddc div(const ddc& a, const dd& b) { return {div(a.re, b), div(a.im, b)}; }

inline ddc operator+(const ddc& a, const ddc& b) { return add(a, b); }
inline ddc operator-(const ddc& a, const ddc& b) { return sub(a, b); }
inline ddc operator*(const ddc& a, const ddc& b) { return mul(a, b); }
inline ddc operator/(const ddc& a, const ddc& b) { return div(a, b); }

ddc cexp_ddc(const ddc& z);
ddc clog_ddc(const ddc& z);   // principal branch
ddc sinpi_ddc(const ddc& z);

// log Gamma(z), principal branch, for Re(z) >= 0.5 (argument recurrence plus
// a Stirling tail, good to ~1e-31 relative)
ddc loggamma_ddc(const ddc& z);

// ---- power-of-two scaled complex ----

struct sddc {
    ddc m;
    long e2 = 0;
};

void normalize(sddc& x);
sddc scaled_from(const ddc& z);
sddc mul(const sddc& a, const sddc& b);
sddc mul(const sddc& a, const ddc& b);
sddc div(const sddc& a, const sddc& b);
sddc div(const sddc& a, const dd& b);

// exp of a complex value whose real part may be far outside the double
// exponent range
sddc cexp_scaled(const ddc& z);

// converts back, saturating to +/-inf or flushing to zero outside the range
ddc to_ddc(const sddc& x);

// 1/Gamma(w).  Exactly zero at nonpositive real integers.
sddc rgamma_scaled(const ddc& w);

}  // namespace wright::dd
