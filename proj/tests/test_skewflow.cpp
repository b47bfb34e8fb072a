#include "folgeo/skewflow.hpp"

#include <cmath>

#include "doctest.h"
#include "folgeo/geoflow.hpp"
#include "folgeo/jsonio.hpp"
#include "test_util.hpp"

using namespace folgeo;

namespace {

Representation rotations() { return rotation_rep(2, {0.3, 0.7, 1.1, 0.2}); }

}  // namespace

TEST_CASE("degenerate holonomy is refused") {
    Representation rho = bolza();
    Representation hol = bolza();
    hol.gens[0].a += 3e-11;  // residual lands between 1e-8 and 1e-6
    hol.relator_residual =
        psl_distance(evaluate(hol, relator_word(2)), MoebiusElement::identity());
    REQUIRE(hol.relator_residual >= 1e-8);
    REQUIRE(hol.relator_residual < 1e-6);
    CHECK_THROWS_AS(SkewSystem(rho, hol), NumericalGuard);
    CHECK_THROWS_AS(SkewSystem(rho, trivial_rep(3)), std::invalid_argument);
}

TEST_CASE("rotation holonomy: log-derivative is exactly zero forever") {
    SkewSystem sys(bolza(), rotations());
    Rng rng(101);
    SkewState s = sys.random_state(rng);
    s = sys.run(s, 300.0);
    CHECK(s.log_deriv_sum == 0.0);
    CHECK(s.elapsed == doctest::Approx(300.0).epsilon(1e-12));
}

TEST_CASE("trivial holonomy: fiber never moves") {
    SkewSystem sys(bolza(), trivial_rep(2));
    Rng rng(103);
    SkewState s = sys.random_state(rng);
    CircleAngle start = s.fiber;
    s = sys.run(s, 120.0);
    CHECK(s.fiber.theta == start.theta);
    CHECK(s.log_deriv_sum == 0.0);
}

TEST_CASE("cocycle identity: split runs agree with one run") {
    SkewSystem sys(bolza(), twist(bolza(), 1));
    Rng rng(107);
    for (int k = 0; k < 25; ++k) {
        SkewState s = sys.random_state(rng);
        double t1 = rng.range(0.3, 4.0), t2 = rng.range(0.3, 4.0);
        SkewState split = sys.run(sys.run(s, t1), t2);
        SkewState whole = sys.run(s, t1 + t2);
        CHECK(circle_distance(split.fiber, whole.fiber) < 1e-8);
        CHECK(split.log_deriv_sum == doctest::Approx(whole.log_deriv_sum).epsilon(1e-8));
        CHECK(psl_distance(split.base.g, whole.base.g) < 1e-8);
    }
}

TEST_CASE("canonical case pins the sign convention: one period accumulates -l(a1)") {
    Representation rho = bolza();
    SkewSystem sys(rho, rho);
    Word a1 = Word::from_letters({1});
    PeriodicOrbit orbit = closed_geodesic(sys.domain(), a1);

    SkewState s;
    s.base = orbit.axis_frame;
    s.fiber = triple_coords(orbit.axis_frame).xi_plus;  // backward-endpoint section
    s = sys.run(s, orbit.length);
    CHECK(psl_distance(s.base.g, orbit.axis_frame.g) < 1e-7);
    CHECK(s.log_deriv_sum == doctest::Approx(-orbit.length).epsilon(1e-6));
    // attracting section stays put
    CHECK(circle_distance(s.fiber, triple_coords(orbit.axis_frame).xi_plus) < 1e-9);
}

TEST_CASE("periodic exponents: equal representations give +-1") {
    Representation rho = bolza();
    auto exps = periodic_exponent(rho, rho, Word::from_letters({1}));
    REQUIRE(exps.size() == 2);
    CHECK(exps[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exps[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("periodic exponents: isometric fiber action gives zero") {
    auto exps = periodic_exponent(bolza(), rotations(), Word::from_letters({1}));
    REQUIRE(exps.size() == 1);
    CHECK(exps[0] == 0.0);
    auto triv = periodic_exponent(bolza(), trivial_rep(2), Word::from_letters({2}));
    REQUIRE(triv.size() == 1);
    CHECK(triv[0] == 0.0);
}

TEST_CASE("periodic exponents: free-quotient ratio below one") {
    Representation rho = bolza();
    Representation hol = builtin_rep("free_quotient");
    Word a1 = Word::from_letters({1});
    auto exps = periodic_exponent(rho, hol, a1);
    REQUIRE(exps.size() == 2);
    double ratio = marked_length(hol, a1) / marked_length(rho, a1);
    CHECK(exps[0] == doctest::Approx(ratio).epsilon(1e-12));
    CHECK(ratio < 1.0);
    CHECK(ratio > 0.0);
    // regression number for the default family: l = 1.2 over the systole
    CHECK(exps[0] == doctest::Approx(1.2 / (2.0 * std::acosh(1.0 + std::sqrt(2.0)))).epsilon(1e-9));
    CHECK_THROWS_AS(periodic_exponent(rotations(), rho, a1), std::invalid_argument);
}

TEST_CASE("periodic exponents are invariant under powers") {
    Representation rho = bolza();
    Representation hol = twist(bolza(), 1);
    Word w = Word::from_letters({1, 2});
    auto base = periodic_exponent(rho, hol, w);
    for (int k = 2; k <= 5; ++k) {
        auto pk = periodic_exponent(rho, hol, w.power(k));
        REQUIRE(pk.size() == base.size());
        for (size_t j = 0; j < pk.size(); ++j)
            CHECK(pk[j] == doctest::Approx(base[j]).epsilon(1e-9));
    }
}

TEST_CASE("one-period simulation reproduces the exact periodic exponents") {
    Representation rho = bolza();
    for (const Representation& hol : {bolza(), twist(bolza(), 1), builtin_rep("free_quotient")}) {
        SkewSystem sys(rho, hol);
        ClassCensus census = enumerate_classes(2, 2);
        int tested = 0;
        for (const Word& w : census.classes) {
            if (tested >= 6) break;
            if (classify(evaluate(hol, w)) == ElementClass::Elliptic) continue;
            ++tested;
            auto expected = periodic_exponent(rho, hol, w);
            auto simulated = simulate_periodic_rates(sys, w);
            REQUIRE(simulated.size() == expected.size());
            std::sort(expected.begin(), expected.end());
            std::sort(simulated.begin(), simulated.end());
            for (size_t j = 0; j < expected.size(); ++j) {
                double scale = std::max(1e-12, std::fabs(expected[j]));
                CHECK(std::fabs(simulated[j] - expected[j]) / scale < 1e-6);
            }
        }
        CHECK(tested == 6);
    }
}

TEST_CASE("backward period accumulation is the negative of the forward one") {
    Representation rho = bolza();
    Representation hol = twist(bolza(), 1);
    SkewSystem sys(rho, hol);
    Word w = Word::from_letters({1});
    PeriodicOrbit orbit = closed_geodesic(sys.domain(), w);
    auto [fwd_end, fwd_map] = sys.transport(orbit.axis_frame, orbit.length);
    auto [bwd_end, bwd_map] = sys.transport(orbit.axis_frame, -orbit.length);
    CHECK(psl_distance(fwd_map.inverse(), bwd_map) < 1e-7);
    for (const auto& fp : fixed_points_circle(fwd_map)) {
        double fwd_ld = act_circle(fwd_map, fp.angle).log_deriv;
        double bwd_ld = act_circle(bwd_map, fp.angle).log_deriv;
        CHECK(fwd_ld == doctest::Approx(-bwd_ld).epsilon(1e-7));
    }
}

TEST_CASE("transverse exponent of the rotation family is exactly zero") {
    ExponentEstimate est = transverse_exponent(bolza(), rotations(), 400.0, 5);
    CHECK(est.value == 0.0);
    CHECK(est.stderr_ == 0.0);
    CHECK(est.batches == 20);
    CHECK(est.horizon == 400.0);
}

TEST_CASE("canonical transverse exponent approaches -1 (short-horizon smoke)") {
    ExponentEstimate est = transverse_exponent(bolza(), bolza(), 1500.0, 1);
    CHECK(est.value < -0.8);
    CHECK(est.value > -1.2);
    CHECK(est.stderr_ > 0.0);
    CHECK(est.stderr_ < 0.2);
}

TEST_CASE("transverse exponent input validation") {
    CHECK_THROWS_AS(transverse_exponent(bolza(), bolza(), 50.0, 0), std::invalid_argument);
}

TEST_CASE("exponent estimates are conjugation (fiber chart) independent") {
    // conjugating hol by a fixed element is exactly a transverse chart change;
    // estimates from the same seed agree within combined batch errors
    Representation rho = bolza();
    Representation hol = bolza();
    for (const MoebiusElement& chart :
         {MoebiusElement::translation(1.0), MoebiusElement::rotation(0.5347)}) {
        ExponentEstimate a = transverse_exponent(rho, hol, 2000.0, 3);
        ExponentEstimate b = transverse_exponent(rho, conjugated(hol, chart), 2000.0, 3);
        CHECK(std::fabs(a.value - b.value) <= 3.0 * (a.stderr_ + b.stderr_));
    }

    // a pure theta shift is an isometry of the chart: with the initial fiber
    // shifted accordingly, the accumulated sums agree to rounding
    MoebiusElement shift = MoebiusElement::rotation(0.5347);
    SkewSystem plain(rho, hol);
    SkewSystem moved(rho, conjugated(hol, shift));
    Rng rng(127);
    SkewState s = plain.random_state(rng);
    SkewState t = s;
    t.fiber = act_circle(shift, s.fiber).angle;
    SkewState s_end = plain.run(s, 500.0);
    SkewState t_end = moved.run(t, 500.0);
    CHECK(t_end.log_deriv_sum == doctest::Approx(s_end.log_deriv_sum).epsilon(1e-9));
    CHECK(circle_distance(t_end.fiber, act_circle(shift, s_end.fiber).angle) < 1e-9);
}

TEST_CASE("multi-seed fan-out is deterministic and ordered") {
    auto ests = transverse_exponent_seeds(bolza(), bolza(), 200.0, 11, 4);
    REQUIRE(ests.size() == 4);
    auto again = transverse_exponent_seeds(bolza(), bolza(), 200.0, 11, 4);
    for (size_t i = 0; i < 4; ++i) CHECK(ests[i].value == again[i].value);
    ExponentEstimate single = transverse_exponent(bolza(), bolza(), 200.0, 13);
    CHECK(transverse_exponent_seeds(bolza(), bolza(), 200.0, 13, 1)[0].value == single.value);
}

TEST_CASE("srb histogram basics") {
    SrbResult res = srb_histogram(bolza(), trivial_rep(2), 200.0, 3, 16, 2);
    // fiber marginal of each orbit is a Dirac at its starting angle
    for (const auto& m : res.per_orbit) {
        auto marg = m.fiber_marginal();
        double mx = 0.0;
        for (double v : marg) mx = std::max(mx, v);
        CHECK(mx == doctest::Approx(1.0));
        double mass = 0.0;
        for (double v : m.normalized()) mass += v;
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    }
    // tv matrix: symmetric, zero diagonal
    for (size_t p = 0; p < res.tv.size(); ++p) {
        CHECK(res.tv[p][p] == 0.0);
        for (size_t q = 0; q < res.tv.size(); ++q)
            CHECK(res.tv[p][q] == doctest::Approx(res.tv[q][p]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(srb_histogram(bolza(), bolza(), 200.0, 1, 8, 0), std::invalid_argument);
}

TEST_CASE("canonical srb mass concentrates on the attracting section") {
    // after burn-in the fiber rides the xi_plus section; the mean distance to
    // it is already at rounding level for every horizon and never grows
    Representation rho = bolza();
    SkewSystem sys(rho, rho);
    auto mean_distance_at = [&](double T, std::uint64_t seed) {
        Rng rng(seed);
        SkewState s = sys.random_state(rng);
        double sum = 0.0;
        long n = 0;
        sys.run(s, T, 0.5, [&](const SkewState& st) {
            if (st.elapsed < T / 2.0) return;
            sum += circle_distance(st.fiber, triple_coords(st.base).xi_plus);
            ++n;
        });
        return sum / static_cast<double>(n);
    };
    double s2 = mean_distance_at(100.0, 4);
    double s3 = mean_distance_at(1000.0, 5);
    double s4 = mean_distance_at(10000.0, 6);
    CHECK(s2 < 1e-9);
    CHECK(s3 <= s2 + 1e-12);
    CHECK(s4 <= s3 + 1e-12);
}

TEST_CASE("attracting section: canonical case returns xi_plus") {
    Representation rho = bolza();
    SkewSystem sys(rho, rho);
    Rng rng(109);
    for (int k = 0; k < 10; ++k) {
        Frame f = sys.domain().sample_liouville(rng);
        CircleAngle section = attracting_section(sys, f, 20.0);
        CHECK(circle_distance(section, triple_coords(f).xi_plus) < 1e-6);
    }
}

TEST_CASE("attracting section: isometric fibers never contract") {
    SkewSystem sys(bolza(), rotations());
    Frame f = Frame::standard();
    CHECK_THROWS_AS(attracting_section(sys, f, 20.0), NumericalGuard);
    CHECK_THROWS_AS(attracting_section(sys, f, 5.0), std::invalid_argument);
}

TEST_CASE("attracting section is flow equivariant") {
    Representation rho = bolza();
    Representation hol = twist(bolza(), 1);
    SkewSystem sys(rho, hol);
    Rng rng(113);
    Frame f = sys.domain().sample_liouville(rng);
    CircleAngle here = attracting_section(sys, f, 30.0);
    double t = 2.5;
    auto [g, map] = sys.transport(f, t);
    CircleAngle there = attracting_section(sys, g, 30.0);
    CircleAngle pushed = act_circle(map, here).angle;
    CHECK(circle_distance(there, pushed) < 1e-6);
}

TEST_CASE("invariant measure witnesses") {
    CHECK(detect_invariant_measure(rotations()).kind == WitnessKind::EllipticCommonCenter);

    InvariantWitness triv = detect_invariant_measure(trivial_rep(2));
    CHECK(triv.kind == WitnessKind::CommonFixedPoint);
    REQUIRE(triv.angles.size() == 1);
    CHECK(triv.angles[0].theta == 0.0);

    CHECK(detect_invariant_measure(bolza()).kind == WitnessKind::NoneDetected);
    CHECK(detect_invariant_measure(builtin_rep("free_quotient")).kind == WitnessKind::NoneDetected);

    // common fixed point at infinity: two upper-triangular hyperbolics
    Representation upper = free_quotient_rep(MoebiusElement::from_matrix(2, 0, 0, 0.5),
                                             MoebiusElement::from_matrix(3, 1, 0, 1.0 / 3));
    InvariantWitness w = detect_invariant_measure(upper);
    CHECK(w.kind == WitnessKind::CommonFixedPoint);
    REQUIRE(w.angles.size() == 1);
    CHECK(circle_distance(w.angles[0], CircleAngle::infinity()) < 1e-9);

    // common pair {0, inf}: a diagonal translation plus the quarter turn that
    // swaps the two points
    Representation pair_rep = free_quotient_rep(MoebiusElement::from_matrix(2, 0, 0, 0.5),
                                                MoebiusElement::rotation(M_PI / 2));
    InvariantWitness p = detect_invariant_measure(pair_rep);
    CHECK(p.kind == WitnessKind::CommonFixedPair);
    REQUIRE(p.angles.size() == 2);
}

TEST_CASE("domination consistency: periodic exponents within kappa_hat") {
    Representation rho = bolza();
    Representation hol = builtin_rep("free_quotient");
    DominationReport report = domination_report(rho, hol, 4);
    REQUIRE(report.verdict == DominationVerdict::DominatedAtCensus);
    for (const Word& w : enumerate_classes(2, 4).classes)
        for (double e : periodic_exponent(rho, hol, w))
            CHECK(std::fabs(e) <= report.kappa_hat + 1e-9);
}
