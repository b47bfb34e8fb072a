#include "folgeo/moebius.hpp"

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

using namespace folgeo;
using testutil::random_element;
using testutil::random_hyperbolic;
using testutil::random_point;

namespace {

const MoebiusElement kDiag = MoebiusElement::from_matrix(2, 0, 0, 0.5);
const MoebiusElement kPara = MoebiusElement::from_matrix(1, 1, 0, 1);
const MoebiusElement kHyp211 = MoebiusElement::from_matrix(2, 1, 1, 1);

}  // namespace

TEST_CASE("normalization is canonical and idempotent") {
    MoebiusElement g = MoebiusElement::from_matrix(-3, 1, 2, -1);  // det 1
    CHECK(g.a > 0.0);  // sign flipped so the first nonzero entry is positive
    MoebiusElement gg = g.normalized();
    CHECK(psl_distance(g, gg) == 0.0);
    CHECK(std::fabs(g.a * g.d - g.b * g.c - 1.0) < 1e-12);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        MoebiusElement h = random_element(rng);
        CHECK(std::fabs(h.a * h.d - h.b * h.c - 1.0) < 1e-12);
        CHECK(psl_distance(h, h.normalized()) < 1e-14);
    }
}

TEST_CASE("classification") {
    CHECK(classify(kPara) == ElementClass::Parabolic);
    CHECK(classify(kDiag) == ElementClass::Hyperbolic);
    MoebiusElement rot = MoebiusElement::from_matrix(std::cos(1.0), -std::sin(1.0),
                                                     std::sin(1.0), std::cos(1.0));
    CHECK(classify(rot) == ElementClass::Elliptic);
    CHECK(classify(MoebiusElement::identity()) == ElementClass::Identity);
}

TEST_CASE("translation length closed forms") {
    CHECK(translation_length(kDiag) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(translation_length(kPara) == 0.0);
    CHECK(translation_length(kHyp211) ==
          doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-12));
}

TEST_CASE("translation length matches displacement-minimization oracle") {
    // independent oracle: minimize dist(g z, z) over a refined grid in H
    const MoebiusElement g = kHyp211;
    double best = 1e9;
    std::complex<double> argbest;
    for (int ix = 0; ix <= 60; ++ix)
        for (int iy = 1; iy <= 60; ++iy) {
            std::complex<double> z(-1.5 + 3.0 * ix / 60.0, 3.0 * iy / 60.0);
            double d = hyperbolic_distance(act_halfplane(g, z), z);
            if (d < best) { best = d; argbest = z; }
        }
    double step = 0.1;
    for (int level = 0; level < 24; ++level) {
        std::complex<double> center = argbest;
        for (int ix = -4; ix <= 4; ++ix)
            for (int iy = -4; iy <= 4; ++iy) {
                std::complex<double> z = center + std::complex<double>(ix * step, iy * step);
                if (z.imag() <= 0.0) continue;
                double d = hyperbolic_distance(act_halfplane(g, z), z);
                if (d < best) { best = d; argbest = z; }
            }
        step *= 0.55;
    }
    CHECK(best == doctest::Approx(translation_length(g)).epsilon(1e-6));
}

TEST_CASE("half-plane action") {
    const std::complex<double> i(0, 1);
    CHECK(std::abs(act_halfplane(MoebiusElement::identity(), i) - i) < 1e-15);
    CHECK(std::abs(act_halfplane(kDiag, i) - std::complex<double>(0, 4)) < 1e-14);
    CHECK(std::abs(act_halfplane(kPara, i) - std::complex<double>(1, 1)) < 1e-15);
    CHECK_THROWS_AS(act_halfplane(kDiag, std::complex<double>(0, -1)), std::invalid_argument);
}

TEST_CASE("half-plane action is an isometry") {
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        MoebiusElement g = random_element(rng);
        auto z = random_point(rng);
        auto w = random_point(rng);
        CHECK(hyperbolic_distance(act_halfplane(g, z), act_halfplane(g, w)) ==
              doctest::Approx(hyperbolic_distance(z, w)).epsilon(1e-9));
    }
}

TEST_CASE("circle chart round trip") {
    Rng rng(5);
    for (int k = 0; k < 500; ++k) {
        double t = rng.unit();
        if (std::fabs(t - 0.5) < 1e-9) continue;
        CircleAngle a{t};
        CHECK(CircleAngle::from_x(a.to_x()).theta == doctest::Approx(t).epsilon(1e-12));
    }
    CHECK(CircleAngle::infinity().theta == 0.5);
}

TEST_CASE("circle action: examples") {
    auto im0 = act_circle(kDiag, CircleAngle{0.0});
    CHECK(im0.angle.theta == doctest::Approx(0.0));
    CHECK(im0.log_deriv == doctest::Approx(std::log(4.0)).epsilon(1e-12));

    auto imi = act_circle(kDiag, CircleAngle::infinity());
    CHECK(imi.angle.theta == doctest::Approx(0.5));
    CHECK(imi.log_deriv == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
    CHECK(std::fabs(imi.log_deriv) ==
          doctest::Approx(translation_length(kDiag)).epsilon(1e-12));

    // inverse cancellation for an elliptic rotation
    MoebiusElement r = MoebiusElement::rotation(0.83);
    CircleAngle t{0.37};
    auto fwd = act_circle(r, t);
    auto back = act_circle(r.inverse(), fwd.angle);
    CHECK(circle_distance(back.angle, t) < 1e-12);
    CHECK(fwd.log_deriv + back.log_deriv == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("circle derivative matches finite differences at infinity") {
    // oracle: symmetric difference quotient of the circle map at theta = 1/2
    const MoebiusElement g = kDiag;
    const double h = 1e-7;
    auto up = act_circle(g, CircleAngle{0.5 + h});
    auto dn = act_circle(g, CircleAngle{0.5 - h});
    double diff = (up.angle.theta - dn.angle.theta) / (2.0 * h);
    CHECK(std::log(diff) == doctest::Approx(act_circle(g, CircleAngle{0.5}).log_deriv).epsilon(1e-6));
}

TEST_CASE("cocycle additivity of the circle log-derivative") {
    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        MoebiusElement g = random_element(rng);
        MoebiusElement h = random_element(rng);
        CircleAngle t{rng.unit()};
        auto inner = act_circle(h, t);
        auto outer = act_circle(g, inner.angle);
        auto both = act_circle(g * h, t);
        CHECK(circle_distance(both.angle, outer.angle) < 1e-10);
        CHECK(both.log_deriv ==
              doctest::Approx(inner.log_deriv + outer.log_deriv).epsilon(1e-9));
    }
}

TEST_CASE("fixed points on the circle") {
    auto fps = fixed_points_circle(kDiag);
    REQUIRE(fps.size() == 2);
    CHECK(fps[0].angle.theta == doctest::Approx(0.0));
    CHECK(fps[0].stability == Stability::Repelling);
    CHECK(fps[1].angle.theta == doctest::Approx(0.5));
    CHECK(fps[1].stability == Stability::Attracting);

    auto pfp = fixed_points_circle(kPara);
    REQUIRE(pfp.size() == 1);
    CHECK(pfp[0].angle.theta == doctest::Approx(0.5));
    CHECK(pfp[0].stability == Stability::Neutral);

    CHECK(fixed_points_circle(MoebiusElement::rotation(0.9)).empty());
    CHECK_THROWS_AS(fixed_points_circle(MoebiusElement::identity()), std::invalid_argument);
}

TEST_CASE("hyperbolic fixed points: golden ratio example with iteration oracle") {
    auto fps = fixed_points_circle(kHyp211);
    REQUIRE(fps.size() == 2);
    double x_att = (1.0 + std::sqrt(5.0)) / 2.0;
    double x_rep = (1.0 - std::sqrt(5.0)) / 2.0;
    CHECK(fps[1].angle.theta == doctest::Approx(CircleAngle::from_x(x_att).theta).epsilon(1e-12));
    CHECK(fps[0].angle.theta == doctest::Approx(CircleAngle::from_x(x_rep).theta).epsilon(1e-12));

    // oracle: forward iteration converges to the attracting point, backward to
    // the repelling one
    Rng rng(9);
    for (int k = 0; k < 10; ++k) {
        CircleAngle t{rng.unit()};
        CircleAngle fwd = t, back = t;
        for (int n = 0; n < 200; ++n) {
            fwd = act_circle(kHyp211, fwd).angle;
            back = act_circle(kHyp211.inverse(), back).angle;
        }
        if (circle_distance(t, fps[0].angle) > 1e-3)
            CHECK(circle_distance(fwd, fps[1].angle) < 1e-9);
        if (circle_distance(t, fps[1].angle) > 1e-3)
            CHECK(circle_distance(back, fps[0].angle) < 1e-9);
    }
}

TEST_CASE("log-derivative at fixed points equals the translation length") {
    Rng rng(13);
    for (int k = 0; k < 100; ++k) {
        MoebiusElement g = random_hyperbolic(rng);
        double l = translation_length(g);
        for (const auto& fp : fixed_points_circle(g)) {
            double ld = act_circle(g, fp.angle).log_deriv;
            CHECK(std::fabs(ld) == doctest::Approx(l).epsilon(1e-9));
        }
    }
}

TEST_CASE("power law and conjugation invariance of the length") {
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
        MoebiusElement g = random_hyperbolic(rng);
        double l = translation_length(g);
        MoebiusElement p = MoebiusElement::identity();
        for (int n = 1; n <= 20; ++n) {
            p = p * g;
            CHECK(translation_length(p) == doctest::Approx(n * l).epsilon(1e-9));
            CHECK(translation_length(p.inverse()) == doctest::Approx(n * l).epsilon(1e-9));
        }
        MoebiusElement h = random_element(rng);
        CHECK(translation_length(h * g * h.inverse()) == doctest::Approx(l).epsilon(1e-9));
    }
}

TEST_CASE("group axioms on random samples") {
    Rng rng(19);
    for (int k = 0; k < 200; ++k) {
        MoebiusElement g = random_element(rng);
        MoebiusElement h = random_element(rng);
        MoebiusElement f = random_element(rng);
        CHECK(psl_distance((g * h).inverse(), h.inverse() * g.inverse()) < 1e-10);
        CHECK(psl_distance((g * h) * f, g * (h * f)) < 1e-10);
        CHECK(psl_distance(g * g.inverse(), MoebiusElement::identity()) < 1e-10);
    }
}

TEST_CASE("lifted circle maps") {
    SUBCASE("empty composition") {
        CHECK(lift_relator({}) == 0);
    }
    SUBCASE("lift commutes with integer translation") {
        Rng rng(23);
        for (int k = 0; k < 50; ++k) {
            LiftedCircleMap L = LiftedCircleMap::canonical(random_element(rng));
            double t = rng.range(-3.0, 3.0);
            CHECK(L(t + 1.0) == doctest::Approx(L(t) + 1.0).epsilon(1e-12));
            CHECK(L(0.0) >= 0.0);
            CHECK(L(0.0) < 1.0);
        }
    }
    SUBCASE("lift projects to the circle action") {
        Rng rng(29);
        for (int k = 0; k < 50; ++k) {
            MoebiusElement g = random_element(rng);
            LiftedCircleMap L = LiftedCircleMap::canonical(g);
            double t = rng.unit();
            double lt = L(t);
            CHECK(circle_distance(CircleAngle::from_raw(lt), act_circle(g, CircleAngle{t}).angle) <
                  1e-12);
        }
    }
    SUBCASE("inverse pair composes to zero translation") {
        Rng rng(31);
        for (int k = 0; k < 50; ++k) {
            LiftedCircleMap L = LiftedCircleMap::canonical(random_element(rng));
            std::vector<LiftedCircleMap> maps{L, L.inverse()};
            CHECK(lift_relator(maps) == 0);
        }
    }
    SUBCASE("full-turn elliptic word has winding one") {
        const int k = 6;
        MoebiusElement r = MoebiusElement::rotation(M_PI / (2 * k));  // rotation by pi/k about i
        std::vector<LiftedCircleMap> maps(2 * k, LiftedCircleMap::canonical(r));
        CHECK(lift_relator(maps) == 1);
        // oracle: cumulative displacement of a tracked angle
        double t = 0.2345, total = 0.0;
        CircleAngle cur{t};
        for (int n = 0; n < 2 * k; ++n) {
            CircleAngle next = act_circle(r, cur).angle;
            double d = next.theta - cur.theta;
            d -= std::round(d);  // shortest displacement
            total += d;
            cur = next;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("non-identity projection is rejected") {
        std::vector<LiftedCircleMap> maps{LiftedCircleMap::canonical(kDiag)};
        CHECK_THROWS_AS(lift_relator(maps), std::invalid_argument);
    }
}
