#include "folgeo/fuchsian_pair.hpp"

#include <cmath>
#include <limits>

namespace folgeo {

bool fuchsian_quality(const Representation& rep, std::string* reason) {
    ClassCensus census = enumerate_classes(rep.genus, 6);
    for (const Word& w : census.classes) {
        if (marked_length(rep, w) < 1e-9) {
            if (reason) *reason = "census class " + w.str() + " has zero length";
            return false;
        }
    }
    int e = euler_number(rep);
    if (std::abs(e) != 2 * rep.genus - 2) {
        if (reason)
            *reason = "|Euler| = " + std::to_string(std::abs(e)) + " != " +
                      std::to_string(2 * rep.genus - 2);
        return false;
    }
    return true;
}

namespace {

void require_gates(const Representation& rho, const Representation& hol) {
    std::string reason;
    if (!fuchsian_quality(rho, &reason))
        throw std::invalid_argument("fuchsian gate failed for rho (" + rho.label + "): " + reason);
    if (!fuchsian_quality(hol, &reason))
        throw std::invalid_argument("fuchsian gate failed for hol (" + hol.label + "): " + reason);
}

}  // namespace

ChiEstimate chi_estimate(const Representation& rho, const Representation& hol, int max_len) {
    require_gates(rho, hol);
    if (max_len < 1 || max_len > 16)
        throw std::invalid_argument("chi_estimate: max_len out of range");
    const double segment = 3.0 * max_len;  // geometric length of the sampled segments
    const int n_samples = 64;
    DirichletDomain domain(rho);
    Rng rng(0x5eed0000ULL + static_cast<std::uint64_t>(max_len));

    ChiEstimate est;
    est.census_len = max_len;
    est.length_min = std::numeric_limits<double>::infinity();
    double sum = 0.0, sum2 = 0.0;
    int n = 0;
    for (int k = 0; k < n_samples; ++k) {
        Frame f = domain.sample_liouville(rng);
        f.deck_log = Word::empty();
        for (double t = 0.0; t < segment; t += 0.5) f = domain.reduce(flow(f, 0.5)).frame;
        Word cls = f.deck_log.cyclically_reduced();
        double lr = marked_length(rho, cls);
        if (lr < segment / 3.0) continue;  // degenerate closing, nearly trivial class
        double ratio = marked_length(hol, cls) / lr;
        sum += ratio;
        sum2 += ratio * ratio;
        ++n;
        est.length_min = std::min(est.length_min, lr);
        est.length_max = std::max(est.length_max, lr);
    }
    if (n == 0) throw NumericalGuard("chi_estimate: no usable closed classes sampled");
    est.n_classes = n;
    est.value = sum / n;
    est.spread = n > 1 ? std::sqrt(std::max(0.0, sum2 / n - est.value * est.value)) : 0.0;
    est.thin_census = n < 10;
    return est;
}

std::vector<BoundaryPair> boundary_samples(const Representation& rho, const Representation& hol,
                                           int max_len) {
    require_gates(rho, hol);
    ClassCensus census = enumerate_classes(rho.genus, max_len);
    std::vector<BoundaryPair> pairs;
    for (const Word& w : census.classes) {
        MoebiusElement mr = evaluate(rho, w);
        MoebiusElement mh = evaluate(hol, w);
        if (classify(mr) != ElementClass::Hyperbolic || classify(mh) != ElementClass::Hyperbolic)
            continue;
        BoundaryPair p;
        p.word = w;
        p.xi = fixed_points_circle(mr)[1].angle;    // attracting
        p.h_xi = fixed_points_circle(mh)[1].angle;  // attracting
        pairs.push_back(std::move(p));
    }
    return pairs;
}

TheoremEReport theorem_e_check(const Representation& rho, const Representation& hol, double T,
                               int max_len, std::uint64_t seed) {
    if (!(T >= 1e4)) throw std::invalid_argument("theorem_e_check: need T >= 1e4");
    require_gates(rho, hol);
    TheoremEReport rep;
    ExponentEstimate lambda = transverse_exponent(rho, hol, T, seed);
    ChiEstimate chi = chi_estimate(rho, hol, max_len);
    rep.lambda_hat = lambda.value;
    rep.stderr_ = lambda.stderr_;
    rep.chi_hat = chi.value;
    rep.spread = chi.spread;
    rep.discrepancy = std::fabs(rep.lambda_hat + rep.chi_hat);
    rep.pass = rep.discrepancy <= std::max(0.05 * rep.chi_hat, 3.0 * rep.stderr_ + rep.spread);
    rep.T = T;
    rep.max_len = max_len;
    rep.seed = seed;
    return rep;
}

}  // namespace folgeo
