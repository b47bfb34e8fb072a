#include "folgeo/skewflow.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace folgeo {

std::vector<double> EmpiricalMeasure::normalized() const {
    std::vector<double> p(counts.size(), 0.0);
    if (total > 0.0)
        for (size_t i = 0; i < counts.size(); ++i) p[i] = counts[i] / total;
    return p;
}

std::vector<double> EmpiricalMeasure::fiber_marginal() const {
    std::vector<double> m(static_cast<size_t>(n_fiber), 0.0);
    auto p = normalized();
    for (size_t i = 0; i < p.size(); ++i) m[i % static_cast<size_t>(n_fiber)] += p[i];
    return m;
}

double total_variation(const EmpiricalMeasure& p, const EmpiricalMeasure& q) {
    auto pp = p.normalized();
    auto qq = q.normalized();
    if (pp.size() != qq.size())
        throw std::invalid_argument("total_variation: incompatible grids");
    double s = 0.0;
    for (size_t i = 0; i < pp.size(); ++i) s += std::fabs(pp[i] - qq[i]);
    return 0.5 * s;
}

const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::CommonFixedPoint: return "CommonFixedPoint";
        case WitnessKind::CommonFixedPair: return "CommonFixedPair";
        case WitnessKind::EllipticCommonCenter: return "EllipticCommonCenter";
        case WitnessKind::NoneDetected: return "NoneDetected";
    }
    return "?";
}

SkewSystem::SkewSystem(const Representation& rho, const Representation& hol)
    : domain_(rho), hol_(hol) {
    if (rho.genus != hol.genus) throw std::invalid_argument("SkewSystem: genus mismatch");
    if (!(rho.relator_residual < 1e-8) || !(hol.relator_residual < 1e-8))
        throw NumericalGuard("SkewSystem: degenerate holonomy (relator residual >= 1e-8)");
    for (const auto& g : hol_.gens) {
        FiberGen fg;
        fg.m = g;
        if (g.b == -g.c && g.a == g.d && std::fabs(g.a) <= 1.0) {
            fg.exact_shift = true;
            fg.shift = std::atan2(g.b, g.a) / M_PI;
        }
        fiber_gens_.push_back(fg);
    }
}

void SkewSystem::fiber_apply(int letter, CircleAngle& angle, double& log_deriv_sum) const {
    const FiberGen& fg = fiber_gens_[static_cast<size_t>(std::abs(letter) - 1)];
    if (fg.exact_shift) {
        angle = CircleAngle::from_raw(angle.theta + (letter > 0 ? fg.shift : -fg.shift));
        return;
    }
    CircleImage im = act_circle(letter > 0 ? fg.m : fg.m.inverse(), angle);
    angle = im.angle;
    log_deriv_sum += im.log_deriv;
}

SkewState SkewSystem::step(const SkewState& s, double dt) const {
    if (!(dt > 0.0) || dt > 0.5 + 1e-12)
        throw std::invalid_argument("SkewSystem::step: need 0 < dt <= 0.5");
    SkewState out = s;
    out.base = flow(out.base, dt);
    ReduceResult red = domain_.reduce(out.base);
    out.base = std::move(red.frame);
    // fiber letters in application (chronological) order
    for (auto it = red.applied.letters.rbegin(); it != red.applied.letters.rend(); ++it)
        fiber_apply(*it, out.fiber, out.log_deriv_sum);
    out.elapsed += dt;
    return out;
}

SkewState SkewSystem::run(SkewState s, double T, double dt,
                          const std::function<void(const SkewState&)>& observer) const {
    if (!(T >= 0.0)) throw std::invalid_argument("SkewSystem::run: negative horizon");
    long n = static_cast<long>(std::ceil(T / dt - 1e-12));
    if (n <= 0) return s;
    double h = T / static_cast<double>(n);
    for (long k = 0; k < n; ++k) {
        s = step(s, h);
        if (observer) observer(s);
    }
    return s;
}

std::pair<Frame, MoebiusElement> SkewSystem::transport(Frame f, double t, double dt) const {
    long n = static_cast<long>(std::ceil(std::fabs(t) / dt - 1e-12));
    MoebiusElement comp = MoebiusElement::identity();
    if (n <= 0) return {std::move(f), comp};
    double h = t / static_cast<double>(n);
    for (long k = 0; k < n; ++k) {
        f = flow(f, h);
        ReduceResult red = domain_.reduce(f);
        f = std::move(red.frame);
        for (auto it = red.applied.letters.rbegin(); it != red.applied.letters.rend(); ++it) {
            int c = *it;
            const MoebiusElement& g = hol_.gens[static_cast<size_t>(std::abs(c) - 1)];
            comp = (c > 0 ? g : g.inverse()) * comp;
        }
    }
    return {std::move(f), comp};
}

SkewState SkewSystem::random_state(Rng& rng) const {
    SkewState s;
    s.base = domain_.sample_liouville(rng);
    s.fiber = CircleAngle::from_raw(rng.unit());
    return s;
}

std::vector<double> periodic_exponent(const Representation& rho, const Representation& hol,
                                      const Word& w) {
    MoebiusElement base = evaluate(rho, w);
    if (classify(base) != ElementClass::Hyperbolic)
        throw std::invalid_argument("periodic_exponent: base image is not hyperbolic");
    MoebiusElement h = evaluate(hol, w);
    if (classify(h) != ElementClass::Hyperbolic) return {0.0};
    double r = translation_length(h) / translation_length(base);
    return {r, -r};
}

std::vector<double> simulate_periodic_rates(const SkewSystem& sys, const Word& w) {
    PeriodicOrbit orbit = closed_geodesic(sys.domain(), w);
    auto [back, holonomy] = sys.transport(orbit.axis_frame, orbit.length);
    if (psl_distance(back.g, orbit.axis_frame.g) > 1e-7)
        throw NumericalGuard("simulate_periodic_rates: orbit did not close");
    if (classify(holonomy) == ElementClass::Identity) return {0.0};
    if (classify(holonomy) == ElementClass::Elliptic) return {};
    std::vector<double> rates;
    for (const CircleFixedPoint& fp : fixed_points_circle(holonomy)) {
        // honest re-run: step the full skew product from the fixed fiber point
        SkewState s;
        s.base = orbit.axis_frame;
        s.fiber = fp.angle;
        s = sys.run(s, orbit.length);
        if (circle_distance(s.fiber, fp.angle) > 1e-6)
            throw NumericalGuard("simulate_periodic_rates: fiber fixed point did not return");
        rates.push_back(s.log_deriv_sum / orbit.length);
    }
    return rates;
}

ExponentEstimate transverse_exponent(const Representation& rho, const Representation& hol,
                                     double T, std::uint64_t seed, double dt, int batches) {
    auto [est, series] = transverse_exponent_series(rho, hol, T, seed, dt, batches);
    return est;
}

std::pair<ExponentEstimate, std::vector<ExponentSeriesPoint>> transverse_exponent_series(
    const Representation& rho, const Representation& hol, double T, std::uint64_t seed, double dt,
    int batches) {
    if (!(T >= 100.0)) throw std::invalid_argument("transverse_exponent: need T >= 100");
    if (batches < 20) throw std::invalid_argument("transverse_exponent: need >= 20 batches");
    SkewSystem sys(rho, hol);
    Rng rng(seed);
    SkewState s = sys.random_state(rng);

    std::vector<double> batch_sums(static_cast<size_t>(batches), 0.0);
    std::vector<ExponentSeriesPoint> series;
    const double batch_time = T / batches;
    double prev_sum = 0.0;
    int prev_batch = -1;
    sys.run(s, T, dt, [&](const SkewState& st) {
        int b = std::min(batches - 1, static_cast<int>(st.elapsed / batch_time));
        if (b != prev_batch && prev_batch >= 0) {
            series.push_back({st.elapsed, st.log_deriv_sum / st.elapsed, prev_batch});
        }
        batch_sums[static_cast<size_t>(b)] += st.log_deriv_sum - prev_sum;
        prev_sum = st.log_deriv_sum;
        prev_batch = b;
        if (st.elapsed >= T - 1e-9)
            series.push_back({st.elapsed, st.log_deriv_sum / st.elapsed, b});
    });

    ExponentEstimate est;
    est.horizon = T;
    est.batches = batches;
    est.value = prev_sum / T;
    double mean = 0.0;
    for (double x : batch_sums) mean += x / batch_time;
    mean /= batches;
    double var = 0.0;
    for (double x : batch_sums) {
        double d = x / batch_time - mean;
        var += d * d;
    }
    var /= (batches - 1);
    est.stderr_ = std::sqrt(var / batches);
    return {est, std::move(series)};
}

namespace {

int worker_count(int jobs) {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FOLGEO_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) n = v;
    }
    if (n < 1) n = 1;
    return std::min(n, jobs);
}

template <typename F>
void parallel_for(int jobs, F&& body) {
    int workers = worker_count(jobs);
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i) body(i);
        return;
    }
    std::vector<std::thread> threads;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= jobs) return;
                body(i);
            }
        });
    for (auto& t : threads) t.join();
}

}  // namespace

std::vector<ExponentEstimate> transverse_exponent_seeds(const Representation& rho,
                                                        const Representation& hol, double T,
                                                        std::uint64_t seed, int n_seeds,
                                                        double dt) {
    if (n_seeds < 1) throw std::invalid_argument("transverse_exponent_seeds: need n_seeds >= 1");
    std::vector<ExponentEstimate> out(static_cast<size_t>(n_seeds));
    parallel_for(n_seeds, [&](int i) {
        out[static_cast<size_t>(i)] =
            transverse_exponent(rho, hol, T, seed + static_cast<std::uint64_t>(i), dt);
    });
    return out;
}

SrbResult srb_histogram(const Representation& rho, const Representation& hol, double T,
                        int n_orbits, int bins, std::uint64_t seed) {
    if (!(T >= 100.0)) throw std::invalid_argument("srb_histogram: need T >= 100");
    if (n_orbits < 2) throw std::invalid_argument("srb_histogram: need n_orbits >= 2");
    if (bins < 1) throw std::invalid_argument("srb_histogram: need bins >= 1");
    SkewSystem sys(rho, hol);
    const int n_dist = 4, n_dir = 4;
    const double dist_max = sys.domain().covering_radius() + 1e-9;

    auto empty_measure = [&] {
        EmpiricalMeasure m;
        m.n_dist = n_dist;
        m.n_dir = n_dir;
        m.n_fiber = bins;
        m.dist_max = dist_max;
        m.counts.assign(static_cast<size_t>(n_dist * n_dir * bins), 0.0);
        return m;
    };

    SrbResult res;
    res.per_orbit.assign(static_cast<size_t>(n_orbits), empty_measure());
    parallel_for(n_orbits, [&](int k) {
        EmpiricalMeasure& m = res.per_orbit[static_cast<size_t>(k)];
        Rng rng(seed + static_cast<std::uint64_t>(k));
        SkewState s = sys.random_state(rng);
        const std::complex<double> i(0.0, 1.0);
        sys.run(s, T, 0.5, [&](const SkewState& st) {
            if (st.elapsed < T / 2.0) return;  // burn-in
            double r = hyperbolic_distance(basepoint(st.base), i);
            int bd = std::min(n_dist - 1, static_cast<int>(r / dist_max * n_dist));
            int bp = std::min(n_dir - 1,
                              static_cast<int>(direction_angle(st.base) / (2.0 * M_PI) * n_dir));
            int bf = std::min(bins - 1, static_cast<int>(st.fiber.theta * bins));
            m.counts[static_cast<size_t>((bd * n_dir + bp) * bins + bf)] += 1.0;
            m.total += 1.0;
        });
    });

    res.aggregate = empty_measure();
    for (const auto& m : res.per_orbit) {
        for (size_t j = 0; j < m.counts.size(); ++j) res.aggregate.counts[j] += m.counts[j];
        res.aggregate.total += m.total;
    }
    res.tv.assign(static_cast<size_t>(n_orbits), std::vector<double>(static_cast<size_t>(n_orbits), 0.0));
    for (int p = 0; p < n_orbits; ++p)
        for (int q = 0; q < n_orbits; ++q)
            if (p != q)
                res.tv[static_cast<size_t>(p)][static_cast<size_t>(q)] = total_variation(
                    res.per_orbit[static_cast<size_t>(p)], res.per_orbit[static_cast<size_t>(q)]);
    return res;
}

CircleAngle attracting_section(const SkewSystem& sys, const Frame& f, double T_back) {
    if (!(T_back >= 10.0)) throw std::invalid_argument("attracting_section: need T_back >= 10");
    Frame start = f;
    start.deck_log = Word::empty();
    auto [past, back_map] = sys.transport(start, -T_back);
    MoebiusElement forward = back_map.inverse();  // holonomy along the orbit into f

    const int m = 16;
    std::vector<double> thetas;
    thetas.reserve(m);
    for (int j = 0; j < m; ++j)
        thetas.push_back(act_circle(forward, CircleAngle::from_raw(j / static_cast<double>(m) + 0.013))
                             .angle.theta);
    // diameter on the circle: 1 - largest gap between consecutive points
    std::sort(thetas.begin(), thetas.end());
    double max_gap = 1.0 - (thetas.back() - thetas.front());
    for (size_t j = 1; j < thetas.size(); ++j)
        max_gap = std::max(max_gap, thetas[j] - thetas[j - 1]);
    double spread = 1.0 - max_gap;
    if (spread > 0.01)
        throw NumericalGuard("attracting_section: non-contraction detected (spread " +
                             std::to_string(spread) + ")");
    // projectively safe circular mean: angles doubled to the full circle
    double sx = 0.0, sy = 0.0;
    for (double t : thetas) {
        sx += std::cos(2.0 * M_PI * t);
        sy += std::sin(2.0 * M_PI * t);
    }
    return CircleAngle::from_raw(std::atan2(sy, sx) / (2.0 * M_PI));
}

CircleAngle attracting_section(const Representation& rho, const Representation& hol,
                               const Frame& f, double T_back) {
    SkewSystem sys(rho, hol);
    return attracting_section(sys, f, T_back);
}

namespace {

// fixed point in H of an elliptic element: the root of c z^2 + (d-a) z - b
// with positive imaginary part
std::complex<double> elliptic_center(const MoebiusElement& g) {
    double A = g.c, B = g.d - g.a, C = -g.b;
    if (std::fabs(A) < 1e-14) throw std::invalid_argument("elliptic_center: not elliptic");
    std::complex<double> disc = std::sqrt(std::complex<double>(B * B - 4.0 * A * C, 0.0));
    std::complex<double> z = (-B + disc) / (2.0 * A);
    if (z.imag() < 0.0) z = (-B - disc) / (2.0 * A);
    return z;
}

bool fixes_angle(const Representation& hol, CircleAngle t, double tol) {
    for (const auto& g : hol.gens)
        if (circle_distance(act_circle(g, t).angle, t) >= tol) return false;
    return true;
}

bool fixes_pair(const Representation& hol, CircleAngle t1, CircleAngle t2, double tol) {
    for (const auto& g : hol.gens) {
        CircleAngle i1 = act_circle(g, t1).angle;
        CircleAngle i2 = act_circle(g, t2).angle;
        bool keep = circle_distance(i1, t1) < tol && circle_distance(i2, t2) < tol;
        bool swap = circle_distance(i1, t2) < tol && circle_distance(i2, t1) < tol;
        if (!keep && !swap) return false;
    }
    return true;
}

}  // namespace

InvariantWitness detect_invariant_measure(const Representation& hol) {
    const double tol = 1e-8;
    std::vector<const MoebiusElement*> nontrivial;
    for (const auto& g : hol.gens)
        if (classify(g) != ElementClass::Identity) nontrivial.push_back(&g);
    if (nontrivial.empty())
        return {WitnessKind::CommonFixedPoint, {CircleAngle{0.0}}};  // everything is fixed

    // candidate circle points come from the first generator with boundary
    // fixed points; elliptic generators have none
    const MoebiusElement* seed = nullptr;
    for (const auto* g : nontrivial)
        if (classify(*g) != ElementClass::Elliptic) { seed = g; break; }
    if (seed) {
        auto fps = fixed_points_circle(*seed);
        for (const auto& fp : fps)
            if (fixes_angle(hol, fp.angle, tol)) return {WitnessKind::CommonFixedPoint, {fp.angle}};
        if (fps.size() == 2 && fixes_pair(hol, fps[0].angle, fps[1].angle, tol))
            return {WitnessKind::CommonFixedPair, {fps[0].angle, fps[1].angle}};
    }

    bool all_elliptic = true;
    for (const auto* g : nontrivial)
        if (classify(*g) != ElementClass::Elliptic) { all_elliptic = false; break; }
    if (all_elliptic) {
        std::complex<double> center = elliptic_center(*nontrivial.front());
        bool common = true;
        for (const auto* g : nontrivial)
            if (std::abs(elliptic_center(*g) - center) >= 1e-8) { common = false; break; }
        if (common) return {WitnessKind::EllipticCommonCenter, {}};
    }
    return {WitnessKind::NoneDetected, {}};
}

}  // namespace folgeo
