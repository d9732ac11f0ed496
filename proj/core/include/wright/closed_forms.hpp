#pragma once

#include <cmath>

#include "wright/airy.hpp"
#include "wright/types.hpp"

namespace wright {

// The three Mainardi functions with elementary/special closed forms:
//   exp0        M_0(z)   = exp(-z)
//   gauss_half  M_1/2(z) = exp(-z^2/4)/sqrt(pi)
//   airy_third  M_1/3(z) = 3^{2/3} Ai(z/3^{1/3})
enum class MainardiKind { exp0, gauss_half, airy_third };

inline double closed_form_mainardi(MainardiKind kind, double z) {
    if (!(z >= 0.0)) throw domain_error("closed_form_mainardi: z must be >= 0");
    constexpr double kInvSqrtPi = 0.5641895835477562869;
    constexpr double kCbrt3 = 1.4422495703074083823;     // 3^{1/3}
    constexpr double kCbrt3Sq = 2.0800838230519041145;   // 3^{2/3}
    switch (kind) {
        case MainardiKind::exp0:
            return std::exp(-z);
        case MainardiKind::gauss_half:
            return std::exp(-z * z / 4.0) * kInvSqrtPi;
        case MainardiKind::airy_third:
            return kCbrt3Sq * airy_ai(z / kCbrt3);
    }
    throw domain_error("closed_form_mainardi: unknown kind");
}

}  // namespace wright
