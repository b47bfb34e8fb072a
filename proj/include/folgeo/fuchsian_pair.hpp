#pragma once

#include "folgeo/skewflow.hpp"

namespace folgeo {

// estimate of the average reparametrization between two Fuchsian
// representations: mean of l_hol/l_rho over closed conjugacy classes sampled
// from the base dynamics (deck words of Liouville-random geodesic segments of
// length ~3*max_len, closed up). Sampling classes from the flow rather than
// from a word-length census matters: a word-capped census keeps only the
// combinatorially straightest classes of a given geometric length, which
// biases the ratio average toward 1.
struct ChiEstimate {
    double value = 0.0;
    int census_len = 0;        // the max_len argument (sets the segment length)
    int n_classes = 0;         // sampled classes entering the average
    double length_min = 0.0;   // achieved l_rho window
    double length_max = 0.0;
    double spread = 0.0;       // std-dev of the per-class ratios
    bool thin_census = false;  // fewer than 10 classes
};

struct BoundaryPair {
    CircleAngle xi;    // attracting fixed point of rho(w)
    CircleAngle h_xi;  // attracting fixed point of hol(w)
    Word word;
};

struct TheoremEReport {
    double lambda_hat = 0.0;
    double stderr_ = 0.0;
    double chi_hat = 0.0;
    double spread = 0.0;
    double discrepancy = 0.0;  // |lambda_hat + chi_hat|
    bool pass = false;
    // provenance
    double T = 0.0;
    int max_len = 0;
    std::uint64_t seed = 0;
};

// practical stand-in for discreteness+faithfulness: no census class of zero
// length up to max_len 6 and |Euler| = 2*genus - 2; heuristic by nature
bool fuchsian_quality(const Representation& rep, std::string* reason = nullptr);

ChiEstimate chi_estimate(const Representation& rho, const Representation& hol, int max_len);

std::vector<BoundaryPair> boundary_samples(const Representation& rho, const Representation& hol,
                                           int max_len);

// simulation vs census cross-check of lambda = -chi; passes when the
// discrepancy is <= max(0.05*chi, 3*stderr + spread)
TheoremEReport theorem_e_check(const Representation& rho, const Representation& hol, double T,
                               int max_len, std::uint64_t seed);

}  // namespace folgeo
