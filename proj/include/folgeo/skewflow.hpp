#pragma once

#include <functional>
#include <optional>

#include "folgeo/geoflow.hpp"
#include "folgeo/length_spectrum.hpp"

namespace folgeo {

// state of the foliated geodesic flow seen as a projective cocycle over the
// base geodesic flow: base frame over rho, fiber point of RP^1 moved by the
// hol-images of the deck letters applied during reduction
struct SkewState {
    Frame base;
    CircleAngle fiber;
    double log_deriv_sum = 0.0;
    double elapsed = 0.0;
};

struct ExponentEstimate {
    double value = 0.0;   // log_deriv_sum / T
    double stderr_ = 0.0; // batch-means standard error, >= 20 batches
    double horizon = 0.0;
    int batches = 0;
};

struct EmpiricalMeasure {
    int n_dist = 0, n_dir = 0, n_fiber = 0;
    std::vector<double> counts;  // flattened [dist][dir][fiber]
    double total = 0.0;
    double dist_max = 0.0;

    std::vector<double> normalized() const;
    std::vector<double> fiber_marginal() const;
};

double total_variation(const EmpiricalMeasure& p, const EmpiricalMeasure& q);

struct SrbResult {
    EmpiricalMeasure aggregate;
    std::vector<EmpiricalMeasure> per_orbit;
    std::vector<std::vector<double>> tv;  // pairwise total-variation distances
};

enum class WitnessKind { CommonFixedPoint, CommonFixedPair, EllipticCommonCenter, NoneDetected };
const char* to_string(WitnessKind k);

struct InvariantWitness {
    WitnessKind kind = WitnessKind::NoneDetected;
    std::vector<CircleAngle> angles;  // 1 point, or the 2 angles of a pair
};

class SkewSystem {
public:
    // guards: equal genus; both relator residuals < 1e-8 (degenerate holonomy
    // between 1e-8 and 1e-6 is refused rather than silently simulated)
    SkewSystem(const Representation& rho, const Representation& hol);

    const DirichletDomain& domain() const { return domain_; }
    const Representation& rho() const { return domain_.rep(); }
    const Representation& hol() const { return hol_; }

    // one flow-and-reduce step, 0 < dt <= 0.5
    SkewState step(const SkewState& s, double dt) const;

    // chunked flow to horizon T; optional per-step observer
    SkewState run(SkewState s, double T, double dt = 0.5,
                  const std::function<void(const SkewState&)>& observer = nullptr) const;

    // base-only flow by t (negative allowed), composing the hol-images of the
    // applied deck letters; returns the composite fiber map
    std::pair<Frame, MoebiusElement> transport(Frame f, double t, double dt = 0.5) const;

    SkewState random_state(Rng& rng) const;

private:
    // rotations about i act on the theta chart as exact translations; the
    // chart metric is invariant under them, so their log-derivative is an
    // exact zero rather than accumulated rounding noise
    struct FiberGen {
        MoebiusElement m;
        bool exact_shift = false;
        double shift = 0.0;
    };

    DirichletDomain domain_;
    Representation hol_;
    std::vector<FiberGen> fiber_gens_;

    void fiber_apply(int letter, CircleAngle& angle, double& log_deriv_sum) const;
};

// exact per-period transverse exponents at the fiber fixed points of the
// holonomy around the closed orbit of w: {+r, -r} with r = l_hol/l_rho for a
// hyperbolic hol-image, {0} otherwise
std::vector<double> periodic_exponent(const Representation& rho, const Representation& hol,
                                      const Word& w);

// simulated counterpart: runs the skew product around one period from each
// fiber fixed point of the simulated holonomy, returns per-period rates
// (empty when the holonomy has no fixed point, i.e. irrational elliptic)
std::vector<double> simulate_periodic_rates(const SkewSystem& sys, const Word& w);

// Birkhoff estimate from a Liouville-random start; T >= 100
ExponentEstimate transverse_exponent(const Representation& rho, const Representation& hol,
                                     double T, std::uint64_t seed, double dt = 0.5,
                                     int batches = 20);

// multi-seed fan-out (seeds seed..seed+n-1), deterministic aggregation order;
// honors FOLGEO_WORKERS for the thread count
std::vector<ExponentEstimate> transverse_exponent_seeds(const Representation& rho,
                                                        const Representation& hol, double T,
                                                        std::uint64_t seed, int n_seeds,
                                                        double dt = 0.5);

// time series of the running mean, sampled once per batch window
struct ExponentSeriesPoint {
    double t = 0.0;
    double running_mean = 0.0;
    int batch_id = 0;
};
std::pair<ExponentEstimate, std::vector<ExponentSeriesPoint>> transverse_exponent_series(
    const Representation& rho, const Representation& hol, double T, std::uint64_t seed,
    double dt = 0.5, int batches = 20);

// empirical SRB statistics: occupation over [T/2, T] per orbit plus the
// pairwise total-variation matrix; T >= 100, n_orbits >= 2
SrbResult srb_histogram(const Representation& rho, const Representation& hol, double T,
                        int n_orbits, int bins, std::uint64_t seed);

// cluster point of a uniform fiber sample pushed backward time T_back along
// the orbit ending at f and forward again; throws NumericalGuard when the
// sample does not contract (spread > 0.01)
CircleAngle attracting_section(const Representation& rho, const Representation& hol,
                               const Frame& f, double T_back);
CircleAngle attracting_section(const SkewSystem& sys, const Frame& f, double T_back);

// sound-but-incomplete witness search for a holonomy-invariant measure
InvariantWitness detect_invariant_measure(const Representation& hol);

}  // namespace folgeo
