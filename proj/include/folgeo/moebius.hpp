#pragma once

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace folgeo {

// thrown when a numerical guard trips (non-termination, non-contraction,
// inconsistent winding, ...); distinct from std::invalid_argument so callers
// can map the two onto different exit codes
class NumericalGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };

// tolerance on ||tr| - 2| separating elliptic / parabolic / hyperbolic
inline constexpr double kClassifyEps = 1e-10;

// point of RP^1 parametrized by theta in [0,1) with x = tan(pi*theta);
// theta = 1/2 is the point at infinity
struct CircleAngle {
    double theta = 0.0;

    static CircleAngle from_raw(double t);     // reduces mod 1
    static CircleAngle from_x(double x);       // finite x
    static CircleAngle infinity() { return CircleAngle{0.5}; }
    static CircleAngle from_vector(double x1, double x2);  // homogeneous (sin,cos)-side

    double to_x() const;                       // tan(pi*theta); +-inf near 1/2
    std::array<double, 2> unit_vector() const; // (sin pi t, cos pi t)
};

// distance on the theta-circle (period 1)
double circle_distance(CircleAngle a, CircleAngle b);

// element of PSL2(R): det normalized to 1, first nonzero entry positive
struct MoebiusElement {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static MoebiusElement identity() { return {}; }
    // normalizes an arbitrary positive-determinant matrix
    static MoebiusElement from_matrix(double a, double b, double c, double d);
    // rotation about i: acts on the theta-circle as theta -> theta + t/pi
    static MoebiusElement rotation(double t);
    // translation of length l along the imaginary axis (0 repelling, inf attracting)
    static MoebiusElement translation(double l);

    MoebiusElement normalized() const;
    MoebiusElement inverse() const;
    double trace() const { return a + d; }

    friend MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h);
};

// entrywise distance in PSL2 (min over the sign ambiguity)
double psl_distance(const MoebiusElement& g, const MoebiusElement& h);

ElementClass classify(const MoebiusElement& g);
const char* to_string(ElementClass c);

// 2*acosh(|tr|/2) if hyperbolic, else 0
double translation_length(const MoebiusElement& g);

// action on the upper half plane; requires Im z > 0
std::complex<double> act_halfplane(const MoebiusElement& g, std::complex<double> z);

// hyperbolic distance, dist = acosh(1 + |z-w|^2 / (2 Im z Im w))
double hyperbolic_distance(std::complex<double> z, std::complex<double> w);

struct CircleImage {
    CircleAngle angle;
    double log_deriv;  // log of the circle-map derivative in the theta chart
};

// action on RP^1 with the chart derivative; for the unit homogeneous
// representative v(theta) the derivative is 1/|g v|^2, so the log-derivative
// telescopes exactly under composition
CircleImage act_circle(const MoebiusElement& g, CircleAngle t);

enum class Stability { Attracting, Repelling, Neutral };

struct CircleFixedPoint {
    CircleAngle angle;
    Stability stability;
};

// hyperbolic: {repelling, attracting}; parabolic: one neutral point;
// elliptic: empty. Throws on (near-)identity input.
std::vector<CircleFixedPoint> fixed_points_circle(const MoebiusElement& g);

// monotone lift of the circle map of `base` to R, commuting with theta -> theta+1.
// the offset-0 lift is pinned by lift(0) in [0,1)
struct LiftedCircleMap {
    MoebiusElement base;
    long offset = 0;

    static LiftedCircleMap canonical(const MoebiusElement& g) { return {g.normalized(), 0}; }

    double operator()(double t) const;
    // functional inverse, again as a lift of base^{-1}
    LiftedCircleMap inverse() const;
};

// integer n with composed_lift(theta) = theta + n, maps applied right-to-left
// (matrix product order). Requires the projected composition to be +-I.
int lift_relator(std::span<const LiftedCircleMap> maps);

}  // namespace folgeo
