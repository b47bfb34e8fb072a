#include "folgeo/geoflow.hpp"

#include <cmath>

namespace folgeo {

std::complex<double> basepoint(const Frame& f) {
    return act_halfplane(f.g, std::complex<double>(0.0, 1.0));
}

double direction_angle(const Frame& f) {
    // derivative of z -> (az+b)/(cz+d) at i is 1/(ci+d)^2; the standard frame
    // direction is pi/2
    double arg = std::atan2(f.g.c, f.g.d);
    double psi = M_PI / 2.0 - 2.0 * arg;
    psi = std::fmod(psi, 2.0 * M_PI);
    if (psi < 0.0) psi += 2.0 * M_PI;
    return psi;
}

Frame flow(const Frame& f, double t) {
    if (std::fabs(t) > 1.0 + 1e-9)
        throw std::invalid_argument("flow: |t| <= 1 per call; chunk longer flows");
    double e = std::exp(t / 2.0);
    Frame out = f;
    out.g = MoebiusElement::from_matrix(f.g.a * e, f.g.b / e, f.g.c * e, f.g.d / e);
    return out;
}

Triple triple_coords(const Frame& f) {
    const MoebiusElement& g = f.g;
    Triple t;
    t.xi_plus = CircleAngle::from_vector(g.b, g.d);            // g * 0
    t.xi_zero = CircleAngle::from_vector(g.a + g.b, g.c + g.d);  // g * 1
    t.xi_minus = CircleAngle::from_vector(g.a, g.c);           // g * inf
    return t;
}

Frame frame_from_triple(const Triple& t) {
    auto vp = t.xi_plus.unit_vector();
    auto vq = t.xi_zero.unit_vector();
    auto vr = t.xi_minus.unit_vector();
    // columns (alpha*vr | beta*vp) with alpha*vr + beta*vp = vq
    double det = vr[0] * vp[1] - vr[1] * vp[0];
    if (std::fabs(det) < 1e-12) throw std::invalid_argument("frame_from_triple: degenerate triple");
    double alpha = (vq[0] * vp[1] - vq[1] * vp[0]) / det;
    double beta = (vr[0] * vq[1] - vr[1] * vq[0]) / det;
    double mdet = alpha * beta * det;
    if (!(mdet > 1e-12))
        throw std::invalid_argument("frame_from_triple: triple not positively oriented");
    Frame f;
    f.g = MoebiusElement::from_matrix(alpha * vr[0], beta * vp[0], alpha * vr[1], beta * vp[1]);
    return f;
}

DirichletDomain::DirichletDomain(Representation rep) : rep_(std::move(rep)) {
    const int n = 2 * rep_.genus;
    for (int k = 1; k <= n; ++k) {
        const MoebiusElement& g = rep_.gens[static_cast<size_t>(k - 1)];
        if (psl_distance(g, MoebiusElement::identity()) < 1e-12) continue;
        singles_.push_back({g, {k}});
        singles_.push_back({g.inverse(), {-k}});
    }
    auto known = [&](const MoebiusElement& m) {
        for (const Step& e : singles_)
            if (psl_distance(e.m, m) < 1e-12) return true;
        for (const Step& e : pairs_)
            if (psl_distance(e.m, m) < 1e-12) return true;
        for (const Step& e : triples_)
            if (psl_distance(e.m, m) < 1e-12) return true;
        return psl_distance(m, MoebiusElement::identity()) < 1e-12;
    };
    for (const Step& s : singles_)
        for (const Step& u : singles_) {
            MoebiusElement m = s.m * u.m;
            if (known(m)) continue;
            // evaluation order: s applied after u
            pairs_.push_back({m, {s.letters[0], u.letters[0]}});
        }
    for (const Step& p : pairs_)
        for (const Step& u : singles_) {
            MoebiusElement m = p.m * u.m;
            if (known(m)) continue;
            triples_.push_back({m, {p.letters[0], p.letters[1], u.letters[0]}});
        }
    const std::complex<double> i(0.0, 1.0);
    for (const Step& s : singles_)
        covering_radius_ = std::max(covering_radius_, hyperbolic_distance(act_halfplane(s.m, i), i));
    if (covering_radius_ == 0.0) covering_radius_ = 1.0;  // trivial representation
}

const DirichletDomain::Step* DirichletDomain::best_step(std::complex<double> z, double current,
                                                        const std::vector<Step>& steps,
                                                        double* best_dist) const {
    const std::complex<double> i(0.0, 1.0);
    const Step* best = nullptr;
    double bd = current - 1e-12;
    for (const Step& s : steps) {
        double d = hyperbolic_distance(act_halfplane(s.m, z), i);
        if (d < bd) {
            bd = d;
            best = &s;
        }
    }
    *best_dist = bd;
    return best;
}

ReduceResult DirichletDomain::reduce(const Frame& f) const {
    const std::complex<double> i(0.0, 1.0);
    Frame cur = f;
    std::vector<int> applied_rev;  // letters in application order
    std::complex<double> z = basepoint(cur);
    double dist = hyperbolic_distance(z, i);
    for (int step = 0; step < 10000; ++step) {
        double nd = 0.0;
        const Step* s = best_step(z, dist, singles_, &nd);
        if (!s) s = best_step(z, dist, pairs_, &nd);
        if (!s) s = best_step(z, dist, triples_, &nd);
        if (!s) {
            ReduceResult out;
            out.frame = std::move(cur);
            std::vector<int> letters(applied_rev.rbegin(), applied_rev.rend());
            out.applied = Word::from_letters(std::move(letters));
            out.frame.deck_log = out.applied * out.frame.deck_log;
            return out;
        }
        cur.g = s->m * cur.g;
        // step letters are in evaluation order; application order is reversed
        for (auto it = s->letters.rbegin(); it != s->letters.rend(); ++it)
            applied_rev.push_back(*it);
        z = basepoint(cur);
        dist = hyperbolic_distance(z, i);
    }
    throw NumericalGuard("reduce: no convergence in 10000 steps (non-discrete input?)");
}

bool DirichletDomain::contains(std::complex<double> z, double slack) const {
    const std::complex<double> i(0.0, 1.0);
    double dist = hyperbolic_distance(z, i);
    for (const Step& s : singles_)
        if (hyperbolic_distance(act_halfplane(s.m, z), i) < dist - slack) return false;
    for (const Step& s : pairs_)
        if (hyperbolic_distance(act_halfplane(s.m, z), i) < dist - slack) return false;
    for (const Step& s : triples_)
        if (hyperbolic_distance(act_halfplane(s.m, z), i) < dist - slack) return false;
    return true;
}

Frame DirichletDomain::sample_liouville(Rng& rng) const {
    const double R = covering_radius_;
    for (int tries = 0; tries < 100000; ++tries) {
        // area-uniform in the ball of radius R around i
        double r = std::acosh(1.0 + rng.unit() * (std::cosh(R) - 1.0));
        double phi = rng.range(0.0, 2.0 * M_PI);
        // move i distance r in direction phi: rotate, then translate up
        MoebiusElement m = MoebiusElement::rotation(phi / 2.0) * MoebiusElement::translation(r);
        std::complex<double> z = act_halfplane(m, std::complex<double>(0.0, 1.0));
        if (!contains(z, 0.0)) continue;
        double psi = rng.range(0.0, M_PI);  // frame rotation parameter, full turn is pi
        Frame f;
        f.g = m * MoebiusElement::rotation(psi);
        return f;
    }
    throw NumericalGuard("sample_liouville: rejection sampling failed");
}

namespace {

// unit eigenvector of m for eigenvalue lam
std::array<double, 2> eigenvector(const MoebiusElement& m, double lam) {
    double n1 = std::hypot(m.b, lam - m.a);
    double n2 = std::hypot(lam - m.d, m.c);
    std::array<double, 2> v;
    if (n1 >= n2)
        v = {m.b / n1, (lam - m.a) / n1};
    else
        v = {(lam - m.d) / n2, m.c / n2};
    return v;
}

}  // namespace

PeriodicOrbit closed_geodesic(const DirichletDomain& domain, const Word& w) {
    MoebiusElement m = evaluate(domain.rep(), w);
    if (classify(m) != ElementClass::Hyperbolic)
        throw std::invalid_argument("closed_geodesic: image is not hyperbolic");
    double tr = m.trace();
    double sg = tr >= 0.0 ? 1.0 : -1.0;
    double big = (tr + sg * std::sqrt(tr * tr - 4.0)) / 2.0;  // |big| > 1
    auto va = eigenvector(m, big);       // attracting = forward endpoint
    auto vr = eigenvector(m, 1.0 / big); // repelling = backward endpoint
    double det = va[0] * vr[1] - va[1] * vr[0];
    if (det < 0.0) { vr[0] = -vr[0]; vr[1] = -vr[1]; det = -det; }
    Frame axis;
    axis.g = MoebiusElement::from_matrix(va[0], vr[0], va[1], vr[1]);

    // slide along the axis to the point closest to i (convex in the flow time)
    const std::complex<double> i(0.0, 1.0);
    auto dist_at = [&](double s) {
        double e = std::exp(s / 2.0);
        MoebiusElement g = MoebiusElement::from_matrix(axis.g.a * e, axis.g.b / e,
                                                       axis.g.c * e, axis.g.d / e);
        return hyperbolic_distance(act_halfplane(g, i), i);
    };
    double lo = -60.0, hi = 60.0;
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (dist_at(m1) < dist_at(m2)) hi = m2; else lo = m1;
    }
    double s_star = (lo + hi) / 2.0;
    double e = std::exp(s_star / 2.0);
    axis.g = MoebiusElement::from_matrix(axis.g.a * e, axis.g.b / e, axis.g.c * e, axis.g.d / e);

    PeriodicOrbit orbit;
    orbit.word = w;
    orbit.axis_frame = domain.reduce(axis).frame;
    orbit.axis_frame.deck_log = Word::empty();
    orbit.length = translation_length(m);
    return orbit;
}

PeriodicOrbit closed_geodesic(const Representation& rep, const Word& w) {
    DirichletDomain domain(rep);
    return closed_geodesic(domain, w);
}

}  // namespace folgeo
