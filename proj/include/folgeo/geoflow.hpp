#pragma once

#include "folgeo/representation.hpp"
#include "folgeo/rng.hpp"

namespace folgeo {

// unit tangent vector of H as a group element: the frame g represents the
// image of the upward unit vector at i under g; deck_log accumulates the deck
// word applied by reduction
struct Frame {
    MoebiusElement g;
    Word deck_log;

    static Frame standard() { return {MoebiusElement::identity(), Word::empty()}; }
};

std::complex<double> basepoint(const Frame& f);
// direction of the tangent vector at the basepoint, in [0, 2pi);
// the standard frame points up (pi/2)
double direction_angle(const Frame& f);

// exact geodesic flow: right translation by diag(e^{t/2}, e^{-t/2});
// |t| <= 1 per call, longer flows are chunked by callers
Frame flow(const Frame& f, double t);

// triple coordinates: xi_plus/xi_minus the backward/forward endpoints of the
// frame's geodesic, xi_zero the orthogonal-geodesic endpoint with
// xi_plus < xi_zero < xi_minus in the cyclic orientation of the theta chart
struct Triple {
    CircleAngle xi_plus, xi_zero, xi_minus;
};

Triple triple_coords(const Frame& f);
Frame frame_from_triple(const Triple& t);

struct ReduceResult {
    Frame frame;
    Word applied;  // deck word, in evaluation order (leftmost letter applied last)
};

// Dirichlet-type reduction machinery for a fixed base representation; the
// step set is the generator images, their inverses, and all products of two
// or three of those (the face pairings of the bolza octagon are among such
// products), tried in tiers
class DirichletDomain {
public:
    explicit DirichletDomain(Representation rep);

    const Representation& rep() const { return rep_; }

    // greedy distance descent to the domain centered at i; guard at 1e4 steps
    ReduceResult reduce(const Frame& f) const;

    bool contains(std::complex<double> z, double slack = 1e-12) const;

    // radius of a hyperbolic ball around i that covers the domain
    double covering_radius() const { return covering_radius_; }

    // uniform (Liouville) random frame: hyperbolic-area-uniform point of the
    // domain (rejection from the covering ball) times uniform direction
    Frame sample_liouville(Rng& rng) const;

private:
    struct Step {
        MoebiusElement m;
        std::vector<int> letters;  // evaluation-order letters of the step
    };
    Representation rep_;
    std::vector<Step> singles_;
    std::vector<Step> pairs_;
    std::vector<Step> triples_;
    double covering_radius_ = 0.0;

    const Step* best_step(std::complex<double> z, double current, const std::vector<Step>& steps,
                          double* best_dist) const;
};

struct PeriodicOrbit {
    Word word;
    Frame axis_frame;   // reduced frame on the axis, oriented toward the attracting end
    double length = 0.0;
};

// the closed geodesic in the free homotopy class of w; requires a hyperbolic
// image. The frame sits at the axis point closest to i, then reduced.
PeriodicOrbit closed_geodesic(const DirichletDomain& domain, const Word& w);
PeriodicOrbit closed_geodesic(const Representation& rep, const Word& w);

struct TracePoint {
    double t = 0.0;
    std::complex<double> z;
    double psi = 0.0;       // direction angle
    int deck_word_length = 0;
};

}  // namespace folgeo
