#pragma once

#include <complex>

#include "folgeo/moebius.hpp"
#include "folgeo/rng.hpp"

namespace folgeo::testutil {

inline double gauss(Rng& rng) {
    // Box-Muller, one value per call
    double u1 = rng.unit();
    double u2 = rng.unit();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline MoebiusElement random_element(Rng& rng) {
    for (;;) {
        double a = 1.0 + 0.8 * gauss(rng), b = 0.8 * gauss(rng);
        double c = 0.8 * gauss(rng), d = 1.0 + 0.8 * gauss(rng);
        if (a * d - b * c > 0.05) return MoebiusElement::from_matrix(a, b, c, d);
    }
}

inline MoebiusElement random_hyperbolic(Rng& rng) {
    for (;;) {
        MoebiusElement g = random_element(rng);
        double t = std::fabs(g.trace());
        if (t > 2.05 && t < 20.0) return g;
    }
}

inline MoebiusElement random_elliptic(Rng& rng) {
    // conjugated rotation
    double angle = rng.range(0.2, M_PI - 0.2);
    MoebiusElement h = random_element(rng);
    return h * MoebiusElement::rotation(angle) * h.inverse();
}

inline std::complex<double> random_point(Rng& rng) {
    return {4.0 * rng.unit() - 2.0, 0.1 + 3.0 * rng.unit()};
}

// Cartan form K(a) T(l) K(b) with l <= lmax: conditioning under control
inline MoebiusElement random_element_bounded(Rng& rng, double lmax) {
    return MoebiusElement::rotation(rng.range(0.0, M_PI)) *
           MoebiusElement::translation(rng.range(0.0, lmax)) *
           MoebiusElement::rotation(rng.range(0.0, M_PI));
}

// entrywise PSL distance relative to the entry scale
inline double rel_psl_distance(const MoebiusElement& g, const MoebiusElement& h) {
    double scale = std::max({1.0, std::fabs(h.a), std::fabs(h.b), std::fabs(h.c), std::fabs(h.d)});
    return psl_distance(g, h) / scale;
}

}  // namespace folgeo::testutil
