#include "folgeo/moebius.hpp"

#include <cmath>
#include <limits>

namespace folgeo {

CircleAngle CircleAngle::from_raw(double t) {
    double u = t - std::floor(t);
    if (u >= 1.0) u = 0.0;  // floor rounding at the seam
    return CircleAngle{u};
}

CircleAngle CircleAngle::from_x(double x) {
    if (std::isinf(x)) return infinity();
    return from_raw(std::atan(x) / M_PI);
}

CircleAngle CircleAngle::from_vector(double x1, double x2) {
    if (x1 == 0.0 && x2 == 0.0)
        throw std::invalid_argument("CircleAngle::from_vector: zero vector");
    return from_raw(std::atan2(x1, x2) / M_PI);
}

double CircleAngle::to_x() const { return std::tan(M_PI * theta); }

std::array<double, 2> CircleAngle::unit_vector() const {
    return {std::sin(M_PI * theta), std::cos(M_PI * theta)};
}

double circle_distance(CircleAngle a, CircleAngle b) {
    double d = std::fabs(a.theta - b.theta);
    return std::min(d, 1.0 - d);
}

MoebiusElement MoebiusElement::from_matrix(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!(det > 0.0) || !std::isfinite(det))
        throw std::invalid_argument("MoebiusElement: determinant must be positive");
    MoebiusElement g{a, b, c, d};
    return g.normalized();
}

MoebiusElement MoebiusElement::rotation(double t) {
    return MoebiusElement{std::cos(t), std::sin(t), -std::sin(t), std::cos(t)}.normalized();
}

MoebiusElement MoebiusElement::translation(double l) {
    return MoebiusElement{std::exp(l / 2), 0.0, 0.0, std::exp(-l / 2)}.normalized();
}

MoebiusElement MoebiusElement::normalized() const {
    MoebiusElement g = *this;
    double det = g.a * g.d - g.b * g.c;
    if (!std::isfinite(det))
        throw std::invalid_argument("MoebiusElement: non-finite entries");
    // ad - bc carries an absolute rounding error of order E^2*eps for entry
    // scale E, so for large matrices a measured det near 1 is not a drift
    // signal; rescale only outside that noise band (keeps det pinned for the
    // bounded matrices of long reduced products, leaves huge powers alone).
    // Entries above 1e3 only arise from long evaluation chains, whose
    // accumulated error needs a wider band.
    double scale = std::max(std::max(std::fabs(g.a), std::fabs(g.b)),
                            std::max(std::fabs(g.c), std::fabs(g.d)));
    double band = (scale < 1e3 ? 64.0 : 4096.0) * scale * scale * 2.2e-16;
    if (std::fabs(det - 1.0) > band) {
        if (!(det > 0.0))
            throw std::invalid_argument("MoebiusElement: determinant must be positive");
        double s = std::sqrt(det);
        g.a /= s; g.b /= s; g.c /= s; g.d /= s;
    }
    const double* e = &g.a;
    for (int i = 0; i < 4; ++i) {
        if (e[i] != 0.0) {
            if (e[i] < 0.0) { g.a = -g.a; g.b = -g.b; g.c = -g.c; g.d = -g.d; }
            break;
        }
    }
    return g;
}

MoebiusElement MoebiusElement::inverse() const {
    return MoebiusElement{d, -b, -c, a}.normalized();
}

MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h) {
    return MoebiusElement{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                          g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d}
        .normalized();
}

double psl_distance(const MoebiusElement& g, const MoebiusElement& h) {
    double dp = 0.0, dm = 0.0;
    const double* x = &g.a;
    const double* y = &h.a;
    for (int i = 0; i < 4; ++i) {
        dp = std::max(dp, std::fabs(x[i] - y[i]));
        dm = std::max(dm, std::fabs(x[i] + y[i]));
    }
    return std::min(dp, dm);
}

ElementClass classify(const MoebiusElement& g) {
    if (psl_distance(g, MoebiusElement::identity()) < 1e-12) return ElementClass::Identity;
    double t = std::fabs(g.trace());
    if (t < 2.0 - kClassifyEps) return ElementClass::Elliptic;
    if (t > 2.0 + kClassifyEps) return ElementClass::Hyperbolic;
    return ElementClass::Parabolic;
}

const char* to_string(ElementClass c) {
    switch (c) {
        case ElementClass::Identity: return "Identity";
        case ElementClass::Elliptic: return "Elliptic";
        case ElementClass::Parabolic: return "Parabolic";
        case ElementClass::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

double translation_length(const MoebiusElement& g) {
    if (classify(g) != ElementClass::Hyperbolic) return 0.0;
    return 2.0 * std::acosh(std::fabs(g.trace()) / 2.0);
}

std::complex<double> act_halfplane(const MoebiusElement& g, std::complex<double> z) {
    if (!(z.imag() > 0.0))
        throw std::invalid_argument("act_halfplane: point not in the upper half plane");
    return (g.a * z + g.b) / (g.c * z + g.d);
}

double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
    double n = std::norm(z - w);
    return std::acosh(1.0 + n / (2.0 * z.imag() * w.imag()));
}

CircleImage act_circle(const MoebiusElement& g, CircleAngle t) {
    auto v = t.unit_vector();
    double w1 = g.a * v[0] + g.b * v[1];
    double w2 = g.c * v[0] + g.d * v[1];
    double r = std::hypot(w1, w2);
    return {CircleAngle::from_vector(w1, w2), -2.0 * std::log(r)};
}

namespace {

// eigenvector of g for eigenvalue lam, as a circle angle
CircleAngle eigen_angle(const MoebiusElement& g, double lam) {
    // rows of (g - lam I) are orthogonal to nothing useful; its null vector is
    // (b, lam-a) or (lam-d, c), whichever is better conditioned
    double n1 = std::hypot(g.b, lam - g.a);
    double n2 = std::hypot(lam - g.d, g.c);
    if (n1 >= n2) return CircleAngle::from_vector(g.b, lam - g.a);
    return CircleAngle::from_vector(lam - g.d, g.c);
}

Stability stability_at(const MoebiusElement& g, CircleAngle t) {
    double ld = act_circle(g, t).log_deriv;
    if (std::fabs(ld) <= 1e-9) return Stability::Neutral;
    return ld < 0.0 ? Stability::Attracting : Stability::Repelling;
}

}  // namespace

std::vector<CircleFixedPoint> fixed_points_circle(const MoebiusElement& g) {
    switch (classify(g)) {
        case ElementClass::Identity:
            throw std::invalid_argument("fixed_points_circle: identity fixes everything");
        case ElementClass::Elliptic:
            return {};
        case ElementClass::Parabolic: {
            double lam = g.trace() / 2.0;  // +-1
            CircleAngle t = eigen_angle(g, lam);
            return {{t, Stability::Neutral}};
        }
        case ElementClass::Hyperbolic: {
            double tr = g.trace();
            double s = tr >= 0.0 ? 1.0 : -1.0;
            double big = (tr + s * std::sqrt(tr * tr - 4.0)) / 2.0;  // |big| > 1
            CircleAngle att = eigen_angle(g, big);
            CircleAngle rep = eigen_angle(g, 1.0 / big);
            return {{rep, stability_at(g, rep)}, {att, stability_at(g, att)}};
        }
    }
    return {};
}

double LiftedCircleMap::operator()(double t) const {
    double fl = std::floor(t);
    double u = t - fl;
    if (u >= 1.0) { u = 0.0; fl += 1.0; }
    double at0 = act_circle(base, CircleAngle{0.0}).angle.theta;
    double tu = act_circle(base, CircleAngle{u}).angle.theta;
    double psi = (tu >= at0 - 1e-15) ? tu : tu + 1.0;
    return fl + psi + static_cast<double>(offset);
}

LiftedCircleMap LiftedCircleMap::inverse() const {
    // inv_canon composed with the offset-0 lift of `base` is a lift of the
    // identity, theta + n; probe n at generic angles (a single probe can land
    // on the wrap point of the chart and silently lose a unit)
    LiftedCircleMap inv_canon = LiftedCircleMap::canonical(base.inverse());
    LiftedCircleMap fwd{base, 0};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        double x = i / 8.0 + 0.0371;
        double n = inv_canon(fwd(x)) - x;
        lo = std::min(lo, n);
        hi = std::max(hi, n);
        sum += n;
    }
    if (hi - lo >= 1e-6)
        throw NumericalGuard("LiftedCircleMap::inverse: inconsistent identity translation");
    long ni = std::lround(sum / 8.0);
    inv_canon.offset = -ni - offset;
    return inv_canon;
}

int lift_relator(std::span<const LiftedCircleMap> maps) {
    if (maps.empty()) return 0;
    MoebiusElement prod = MoebiusElement::identity();
    for (const auto& m : maps) prod = prod * m.base;
    if (psl_distance(prod, MoebiusElement::identity()) >= 1e-8)
        throw std::invalid_argument("lift_relator: projected composition is not the identity");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        double t = i / 8.0 + 0.0371;
        double x = t;
        for (auto it = maps.rbegin(); it != maps.rend(); ++it) x = (*it)(x);
        double delta = x - t;
        lo = std::min(lo, delta);
        hi = std::max(hi, delta);
        sum += delta;
    }
    if (hi - lo >= 1e-6)
        throw NumericalGuard("lift_relator: inconsistent winding across sample angles");
    return static_cast<int>(std::lround(sum / 8.0));
}

}  // namespace folgeo
