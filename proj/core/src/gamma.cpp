#include "wright/gamma.hpp"

#include <cmath>
#include <limits>

namespace wright {

namespace {

// Lanczos g = 7, 9-term coefficient set (Godfrey)
constexpr double kG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178;
constexpr double kPi = 3.14159265358979323846;
constexpr double kPoleSnap = 1e-14;

template <typename T>
T lanczos_sum(const T& z) {
    T acc = T(kLanczos[0]);
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + static_cast<double>(k - 1));
    return acc;
}

double log_gamma_real(double x) {
    // x > 0
    if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - log_gamma_real(1.0 - x);
    double base = x + kG - 0.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(base) - base + std::log(lanczos_sum(x));
}

// sin(pi x) with the integer part removed exactly
double sinpi_real(double x) {
    double k = std::nearbyint(x);
    double r = x - k;
    double s = std::sin(kPi * r);
    return std::fmod(std::fabs(k), 2.0) == 1.0 ? -s : s;
}

double cospi_real(double x) {
    double k = std::nearbyint(x);
    double r = x - k;
    double c = std::cos(kPi * r);
    return std::fmod(std::fabs(k), 2.0) == 1.0 ? -c : c;
}

std::complex<double> sinpi_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return {sinpi_real(z.real()), 0.0};
    double py = kPi * z.imag();
    return {sinpi_real(z.real()) * std::cosh(py), cospi_real(z.real()) * std::sinh(py)};
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() > 0.0) return {log_gamma_real(z.real()), 0.0};
    // complex branch, Re(z) >= 0.5
    std::complex<double> base = z + (kG - 0.5);
    return kHalfLogTwoPi + (z - 0.5) * std::log(base) - base + std::log(lanczos_sum(z));
}

double recip_gamma(double x) {
    double k = std::nearbyint(x);
    if (k <= 0.0 && std::fabs(x - k) <= kPoleSnap) return 0.0;
    if (x >= 0.5) return std::exp(-log_gamma_real(x));
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi; may legitimately overflow for
    // very negative x where the true magnitude exceeds the double range
    return sinpi_real(x) * std::exp(log_gamma_real(1.0 - x)) / kPi;
}

std::complex<double> recip_gamma(std::complex<double> z) {
    if (z.imag() == 0.0) return {recip_gamma(z.real()), 0.0};
    double k = std::nearbyint(z.real());
    if (k <= 0.0 && std::fabs(z.real() - k) <= kPoleSnap && std::fabs(z.imag()) <= kPoleSnap)
        return {0.0, 0.0};
    if (z.real() >= 0.5) return std::exp(-log_gamma(z));
    return sinpi_complex(z) * std::exp(log_gamma(1.0 - z)) / kPi;
}

}  // namespace wright
