#include "doctest.h"

#include "apxnum/errors.hpp"
#include "apxnum/shift_lab.hpp"
#include "apxnum/symbols.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace apx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> inv_log_floor(int count) {
    std::vector<double> eps;
    for (int n = 1; n <= count; ++n)
        eps.push_back(1.0 / std::log(static_cast<double>(n) + 2.0));
    return eps;
}

} // namespace

TEST_SUITE_BEGIN("shift_lab");

TEST_CASE("log-convexification keeps an already convex sequence") {
    std::vector<double> eps;
    for (int n = 1; n <= 8; ++n) eps.push_back(1.0 / n);
    const auto delta = logconvexify(eps);
    REQUIRE(delta.size() == eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        CHECK(delta[i] == doctest::Approx(eps[i]).epsilon(1e-15));
    CHECK(delta[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(delta[3] == doctest::Approx(1.0 / 4.0).epsilon(1e-15));

    std::vector<double> geo;
    for (int n = 1; n <= 10; ++n) geo.push_back(std::pow(2.0, -n));
    const auto dg = logconvexify(geo);
    for (std::size_t i = 0; i < geo.size(); ++i)
        CHECK(dg[i] == doctest::Approx(geo[i]).epsilon(1e-15));
}

TEST_CASE("log-convexification monotonizes a constant input") {
    const std::vector<double> eps(6, 0.3);
    const auto delta = logconvexify(eps);
    for (std::size_t i = 0; i + 1 < delta.size(); ++i)
        CHECK(delta[i + 1] < delta[i]);
    for (std::size_t i = 0; i < delta.size(); ++i)
        CHECK(delta[i] >= 0.3);
    for (std::size_t i = 1; i + 1 < delta.size(); ++i)
        CHECK(delta[i + 1] * delta[i - 1] >= delta[i] * delta[i] * (1.0 - 1e-12));
}

TEST_CASE("log-convexification random property trial") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> start(0.5, 2.0);
    std::uniform_real_distribution<double> frac(0.3, 1.0);
    std::uniform_int_distribution<int> len(3, 20);
    std::bernoulli_distribution hold(0.3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> eps{start(rng)};
        const int m = len(rng);
        for (int i = 1; i < m; ++i)
            eps.push_back(hold(rng) ? eps.back() : eps.back() * frac(rng));
        const auto delta = logconvexify(eps);
        REQUIRE(delta.size() == eps.size());
        for (std::size_t i = 0; i < eps.size(); ++i) {
            CHECK(delta[i] >= eps[i] - 1e-15);
            CHECK(delta[i] > 0.0);
        }
        for (std::size_t i = 0; i + 1 < delta.size(); ++i)
            CHECK(delta[i + 1] <= delta[i] * (1.0 + 1e-12));
        for (std::size_t i = 1; i + 1 < delta.size(); ++i)
            CHECK(delta[i + 1] * delta[i - 1] >=
                  delta[i] * delta[i] * (1.0 - 1e-12));
    }
}

TEST_CASE("log-convexification guards") {
    CHECK_THROWS_AS(logconvexify({1.0}), domain_error);
    CHECK_THROWS_AS(logconvexify({1.0, 0.0}), domain_error);
    CHECK_THROWS_AS(logconvexify({1.0, -0.5, 0.1}), domain_error);
}

TEST_CASE("separation constant of a two-point set") {
    const auto c = carleson_constant({cdouble(0.0, 0.0), cdouble(0.5, 0.0)});
    REQUIRE(c.per_point.size() == 2);
    CHECK(c.per_point[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.per_point[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.delta == doctest::Approx(0.5).epsilon(1e-15));

    const cdouble a(0.0, 0.3), b(-0.4, 0.0);
    const auto c2 = carleson_constant({a, b});
    const double rho = pseudo_hyperbolic(a, b);
    CHECK(c2.delta == doctest::Approx(rho).epsilon(1e-15));
}

TEST_CASE("separation constant of a singleton is an empty product") {
    const auto c = carleson_constant({cdouble(0.37, -0.2)});
    CHECK(c.delta == 1.0);
    REQUIRE(c.per_point.size() == 1);
    CHECK(c.per_point[0] == 1.0);
}

TEST_CASE("separation constant of the dyadic radial sequence") {
    std::vector<cdouble> u;
    for (int j = 1; j <= 40; ++j)
        u.emplace_back(1.0 - std::pow(2.0, -j), 0.0);
    const auto c = carleson_constant(u);
    CHECK(c.delta == doctest::Approx(0.0146712731434).epsilon(1e-9));
    CHECK(c.delta >= std::exp(-kPi * kPi));
    std::size_t argmin = 0;
    for (std::size_t n = 1; n < c.per_point.size(); ++n)
        if (c.per_point[n] < c.per_point[argmin]) argmin = n;
    CHECK(argmin == 21); // worst point sits mid-sequence, not at an end
}

TEST_CASE("separation constant guards") {
    CHECK_THROWS_AS(carleson_constant({}), domain_error);
    CHECK_THROWS_AS(carleson_constant({cdouble(0.2, 0.0), cdouble(0.2, 0.0)}),
                    domain_error);
    CHECK_THROWS_AS(carleson_constant({cdouble(1.0, 0.0), cdouble(0.2, 0.0)}),
                    domain_error);
}

TEST_CASE("interpolation constant bracket") {
    const auto b = interpolation_constant_bounds(0.5);
    CHECK(b.lower == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(b.upper == doctest::Approx(2.0 * (1.0 + std::log(2.0))).epsilon(1e-15));
    CHECK(b.lambda == 1.0);

    const auto b2 = interpolation_constant_bounds(0.5, 2.0);
    CHECK(b2.upper == doctest::Approx(2.0 * b.upper).epsilon(1e-15));
    CHECK(b2.lower == doctest::Approx(2.0).epsilon(1e-15));

    const auto b3 = interpolation_constant_bounds(1.0);
    CHECK(b3.lower == 1.0);
    CHECK(b3.upper == 1.0);

    CHECK_THROWS_AS(interpolation_constant_bounds(0.0), domain_error);
    CHECK_THROWS_AS(interpolation_constant_bounds(1.5), domain_error);
    CHECK_THROWS_AS(interpolation_constant_bounds(0.5, 0.0), domain_error);
}

TEST_CASE("geometric-sequence separation floors") {
    CHECK(hadlac_floor(0.5) == doctest::Approx(std::exp(-kPi * kPi)).epsilon(1e-13));
    CHECK(hadlac_floor(1e-9) ==
          doctest::Approx(std::exp(-kPi * kPi / 2.0)).epsilon(1e-6));
    double prev = 1.0;
    for (double s = 0.05; s < 1.0; s += 0.05) {
        const double f = hadlac_floor(s);
        CHECK(f < prev);
        prev = f;
    }
    CHECK_THROWS_AS(hadlac_floor(0.0), domain_error);
    CHECK_THROWS_AS(hadlac_floor(1.0), domain_error);
}

TEST_CASE("truncated product refines the separation floor") {
    CHECK(hoffman_product(0.5, 60) ==
          doctest::Approx(0.0146710737643).epsilon(1e-9));
    // the dyadic 40-point separation constant converges onto this product
    CHECK(hoffman_product(0.5, 60) ==
          doctest::Approx(0.0146712731434).epsilon(3e-5));
    double prev = 1.0;
    for (int t = 1; t <= 40; ++t) {
        const double p = hoffman_product(0.5, t);
        CHECK(p <= prev);
        prev = p;
    }
    for (double s = 0.05; s < 1.0; s += 0.05)
        CHECK(hoffman_product(s, 200) >= hadlac_floor(s));
    CHECK(hoffman_product(0.01, 50) > 0.95);
    CHECK_THROWS_AS(hoffman_product(0.5, 0), domain_error);
    CHECK_THROWS_AS(hoffman_product(1.0, 5), domain_error);
}

TEST_CASE("lens-image separation floor") {
    const double a_theta = kPi * kPi * std::sqrt(2.0);
    CHECK(boue_floor(0.5, 0.5) ==
          doctest::Approx(std::exp(-2.0 * a_theta)).epsilon(1e-12));
    CHECK(boue_floor(0.5, 0.5) == doctest::Approx(7.498e-13).epsilon(1e-3));
    // theta -> 1 recovers the automorphism-like constant pi^2/2
    CHECK(boue_floor(0.3, 1.0 - 1e-9) ==
          doctest::Approx(hadlac_floor(0.3)).epsilon(1e-6));
    CHECK_THROWS_AS(boue_floor(0.0, 0.5), domain_error);
    CHECK_THROWS_AS(boue_floor(0.5, 1.0), domain_error);
}

TEST_CASE("lens-image ratio stays below the contracted ratio") {
    const double sp = boue_sigma_prime(0.5, 0.5);
    CHECK(sp == doctest::Approx(1.0 - std::sqrt(2.0) / 8.0).epsilon(1e-14));
    CHECK(sp == doctest::Approx(0.823223304703).epsilon(1e-10));

    // push the dyadic radii through the lens map and measure the gap ratios
    const Symbol lens = Symbol::lens(0.5);
    std::vector<double> gap;
    for (int j = 1; j <= 25; ++j) {
        const cdouble v = lens.eval(cdouble(1.0 - std::pow(2.0, -j), 0.0));
        CHECK(std::abs(v.imag()) < 1e-12);
        gap.push_back(1.0 - v.real());
    }
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < gap.size(); ++i)
        worst = std::max(worst, gap[i + 1] / gap[i]);
    CHECK(worst == doctest::Approx(0.7493793664).epsilon(1e-6));
    CHECK(worst < sp);
    CHECK_THROWS_AS(boue_sigma_prime(1.0, 0.5), domain_error);
    CHECK_THROWS_AS(boue_sigma_prime(0.5, 0.0), domain_error);
}

TEST_CASE("radial sequences expose gap ratios") {
    const auto r = make_radial_sequence({0.5, 0.75, 0.875});
    const auto q = r.ratios();
    REQUIRE(q.size() == 2);
    CHECK(q[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.max_ratio() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.hayman_newman());

    const auto slow = make_radial_sequence({0.5, 2.0 / 3.0, 0.75, 0.8});
    CHECK(slow.max_ratio() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(slow.hayman_newman());

    CHECK_THROWS_AS(make_radial_sequence({0.5}), domain_error);
    CHECK_THROWS_AS(make_radial_sequence({0.5, 0.5}), domain_error);
    CHECK_THROWS_AS(make_radial_sequence({0.5, 0.4}), domain_error);
    CHECK_THROWS_AS(make_radial_sequence({0.0, 0.5}), domain_error);
    CHECK_THROWS_AS(make_radial_sequence({0.5, 1.0}), domain_error);
}

TEST_CASE("shift weights from a radial sequence") {
    const auto r = make_radial_sequence({0.25, 0.5, 0.75});
    const auto m = shift_from_sequence(
        r, -1.0, [](double x) { return cdouble(x - 0.25, 0.0); }, "z - 0.25");
    REQUIRE(m.weights.size() == 2);
    CHECK(m.weights[0] == doctest::Approx(0.25 * std::sqrt(0.8)).epsilon(1e-14));
    CHECK(m.weights[1] ==
          doctest::Approx(0.5 * std::sqrt(0.4375 / 0.75)).epsilon(1e-14));
    CHECK(m.weights[1] == doctest::Approx(0.3818813).epsilon(1e-6));
    CHECK(m.alpha == -1.0);
    CHECK(m.h_descriptor == "z - 0.25");
    CHECK(m.source.points == r.points);
}

TEST_CASE("default multiplier vanishes at the first radius") {
    const auto m = shift_from_sequence(make_radial_sequence({0.5, 0.75}), -1.0);
    REQUIRE(m.weights.size() == 1);
    CHECK(m.weights[0] ==
          doctest::Approx(0.25 * std::sqrt(0.4375 / 0.75)).epsilon(1e-14));
    CHECK(m.h_descriptor == "z - 0.5");
}

TEST_CASE("shift weights scale with the space exponent") {
    const auto r = make_radial_sequence({0.25, 0.5, 0.75});
    const auto m = shift_from_sequence(r, 0.0);
    REQUIRE(m.weights.size() == 2);
    CHECK(m.weights[0] == doctest::Approx(0.25 * 0.8).epsilon(1e-14));
    CHECK(m.weights[1] == doctest::Approx(0.5 * (0.4375 / 0.75)).epsilon(1e-14));
}

TEST_CASE("shift weight guards") {
    const auto r = make_radial_sequence({0.5, 0.75});
    CHECK_THROWS_AS(shift_from_sequence(
                        r, -1.0, [](double x) { return cdouble(x - 0.25, 0.0); },
                        "z - 0.25"),
                    precondition_error);
    CHECK_THROWS_AS(shift_from_sequence(r, -1.5), domain_error);
}

TEST_CASE("shift matrix realizes the weighted backward shift") {
    const std::vector<double> w{0.5, 0.9, 0.1};
    const Eigen::MatrixXd b = shift_matrix(w);
    REQUIRE(b.rows() == 4);
    REQUIRE(b.cols() == 4);
    CHECK(b.col(0).norm() == 0.0);
    CHECK(b.row(3).norm() == 0.0);
    for (int n = 0; n < 3; ++n) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
        e(n + 1) = 1.0;
        Eigen::VectorXd img = b * e;
        CHECK(img(n) == w[static_cast<std::size_t>(n)]);
        img(n) = 0.0;
        CHECK(img.norm() == 0.0);
    }
}

TEST_CASE("shift singular values are the sorted weight moduli") {
    ShiftModel m;
    m.weights = {0.5, 0.9, 0.1};
    CHECK(shift_singular(m, 1) == 0.9);
    CHECK(shift_singular(m, 2) == 0.5);
    CHECK(shift_singular(m, 3) == 0.1);
    CHECK(shift_singular(m, 4) == 0.0);
    CHECK_THROWS_AS(shift_singular(m, 0), domain_error);
    CHECK_THROWS_AS(shift_singular(m, 5), domain_error);
}

TEST_CASE("shift singular values match a dense SVD") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> mag(0.01, 2.0);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> w(static_cast<std::size_t>(len(rng)));
        for (double& x : w) x = mag(rng);
        const Eigen::MatrixXd b = shift_matrix(w);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
        std::vector<double> sorted = w;
        std::sort(sorted.rbegin(), sorted.rend());
        sorted.push_back(0.0);
        REQUIRE(svd.singularValues().size() ==
                static_cast<Eigen::Index>(sorted.size()));
        for (std::size_t i = 0; i < sorted.size(); ++i)
            CHECK(std::abs(svd.singularValues()(static_cast<Eigen::Index>(i)) -
                           sorted[i]) < 1e-12);
    }
}

TEST_CASE("minoration transfers a weight floor to the singular values") {
    CHECK(minoration_check({0.5, 0.9, 0.1}, {0.1, 0.1, 0.1}));
    CHECK(minoration_check({0.5, 0.4, 0.3}, {0.5, 0.4, 0.3}));
    CHECK(minoration_check({0.5, 0.4, 0.3}, {0.45, 0.35}));
    CHECK_FALSE(minoration_check({0.5, 0.9, 0.1}, {0.1, 0.2, 0.1})); // not nonincreasing
    CHECK_FALSE(minoration_check({0.5, 0.05}, {0.1, 0.1}));          // floor above a weight
    CHECK_FALSE(minoration_check({0.5, 0.4}, {0.1, 0.1, 0.1}));      // floor longer than weights
    CHECK_FALSE(minoration_check({}, {0.1}));
    CHECK_FALSE(minoration_check({0.5}, {}));
}

TEST_CASE("slow-decay pipeline on the logarithmic floor") {
    const auto eps = inv_log_floor(199);
    const auto rep = slow_decay_pipeline(eps, 1.0, 200);

    REQUIRE(rep.delta_seq.size() == eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        CHECK(rep.delta_seq[i] == doctest::Approx(eps[i]).epsilon(1e-15));
    CHECK_FALSE(rep.normalized);
    CHECK(rep.A_n[0] == doctest::Approx(std::log(std::log(3.0))).epsilon(1e-12));

    CHECK(rep.hayman_ok);
    CHECK(rep.weights_ok);
    CHECK(rep.minoration_ok);

    REQUIRE(rep.model.weights.size() == 199);
    REQUIRE(rep.a_n.size() == 200);
    CHECK(rep.a_n.back() == 0.0);
    CHECK(rep.model.h_descriptor == "z - 0.5");

    const double r1 = rep.model.source.points[0];
    const double r2 = rep.model.source.points[1];
    CHECK(r1 == 0.5);
    CHECK(rep.d == doctest::Approx((r2 - r1) / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(rep.d == doctest::Approx(0.06062187313).epsilon(1e-9));
    CHECK(rep.model.weights[0] == doctest::Approx(0.0802359871).epsilon(1e-9));

    // every weight and every singular value clears the certified floor with
    // genuine slack, no tolerance needed
    double slack = 1e300;
    for (std::size_t n = 0; n < rep.model.weights.size(); ++n) {
        CHECK(rep.model.weights[n] >= rep.d * eps[n]);
        CHECK(rep.a_n[n] >= rep.d * eps[n]);
        slack = std::min(slack, rep.model.weights[n] / (rep.d * eps[n]));
    }
    CHECK(slack == doctest::Approx(1.454066608).epsilon(1e-6));

    CHECK(rep.interp_upper > 1.0);
    CHECK(rep.floor_constant ==
          doctest::Approx(rep.d / (2.0 * rep.interp_upper * rep.interp_upper))
              .epsilon(1e-15));

    std::vector<double> resorted = rep.model.weights;
    std::sort(resorted.rbegin(), resorted.rend());
    for (std::size_t i = 0; i < resorted.size(); ++i)
        CHECK(rep.a_n[i] == resorted[i]);
}

TEST_CASE("slow-decay pipeline on a geometric floor has dyadic radii") {
    std::vector<double> eps;
    for (int n = 1; n <= 9; ++n) eps.push_back(std::pow(2.0, -n));
    const auto rep = slow_decay_pipeline(eps, 1.0, 10);
    CHECK(rep.hayman_ok);
    CHECK(rep.weights_ok);
    CHECK(rep.minoration_ok);
    // ratio_n = eps_n^2 = 4^{-n} exactly, so the radii are exact dyadics
    CHECK(rep.model.source.points[1] == 0.875);
    CHECK(rep.model.source.points[2] == 0.9921875);
}

TEST_CASE("slow-decay pipeline monotonizes a constant floor") {
    const std::vector<double> eps(50, 0.3);
    const auto rep = slow_decay_pipeline(eps, 1.0, 12);
    CHECK(rep.normalized);
    CHECK(rep.delta_seq[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rep.hayman_ok);
    CHECK(rep.weights_ok);
    CHECK(rep.minoration_ok);
}

TEST_CASE("slow-decay pipeline is invariant under the rate constant") {
    const auto eps = inv_log_floor(29);
    const auto a = slow_decay_pipeline(eps, 1.0, 30);
    const auto b = slow_decay_pipeline(eps, 7.0, 30);
    REQUIRE(a.model.weights.size() == b.model.weights.size());
    for (std::size_t i = 0; i < a.model.weights.size(); ++i)
        CHECK(a.model.weights[i] ==
              doctest::Approx(b.model.weights[i]).epsilon(1e-15));
    for (std::size_t i = 0; i < a.A_n.size(); ++i)
        CHECK(b.A_n[i] == doctest::Approx(a.A_n[i] / 7.0).epsilon(1e-13));
}

TEST_CASE("slow-decay pipeline guards") {
    const auto eps = inv_log_floor(29);
    CHECK_THROWS_AS(slow_decay_pipeline(eps, 1.0, 2), domain_error);
    CHECK_THROWS_AS(slow_decay_pipeline(eps, 0.0, 10), domain_error);
    CHECK_THROWS_AS(slow_decay_pipeline(eps, 1.0, 40), domain_error);
    std::vector<double> geo;
    for (int n = 1; n <= 39; ++n) geo.push_back(std::pow(2.0, -n));
    // gap ratio 4^{-n} drives the gaps below the double range before n = 40
    CHECK_THROWS_AS(slow_decay_pipeline(geo, 1.0, 40), domain_error);
}

TEST_CASE("comparison domain profile and star shape") {
    const auto dom = make_omega({1.0, 2.0, 3.0, 4.0, 5.0});
    CHECK(dom.K == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dom.psi(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dom.psi(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n <= 5; ++n) {
        const double t = std::exp(static_cast<double>(n - 1));
        CHECK(dom.A(t) == doctest::Approx(static_cast<double>(n)).epsilon(1e-13));
        CHECK(dom.psi(t) == doctest::Approx(t / n).epsilon(1e-13));
    }
    CHECK(dom.psi(-std::numbers::e) ==
          doctest::Approx(dom.psi(std::numbers::e)).epsilon(1e-15));

    const double e1 = std::numbers::e;
    CHECK(dom.contains(cdouble(e1, 1.35)));
    CHECK_FALSE(dom.contains(cdouble(e1, 1.37)));
    CHECK(dom.contains(cdouble(-e1, -1.35)));

    CHECK(0.5 * dom.psi(2.0) <= dom.psi(1.0) * (1.0 + 1e-12));
    const double xs[] = {0.05, 0.5, 1.0, 2.0, e1, 5.0, e1 * e1, 20.0, 100.0};
    for (double lam = 0.1; lam <= 1.0; lam += 0.1)
        for (double x : xs)
            CHECK(lam * dom.psi(x) <= dom.psi(lam * x) * (1.0 + 1e-12));
}

TEST_CASE("comparison domain extends the last chord outward") {
    const auto dom = make_omega({1.0, 2.0});
    const double e1 = std::numbers::e;
    const double slope = 1.0 / (e1 - 1.0);
    CHECK(dom.A(e1 * e1) ==
          doctest::Approx(2.0 + slope * (e1 * e1 - e1)).epsilon(1e-13));
    CHECK(dom.A(0.0) == 0.0);
    CHECK(dom.A(-3.0) == 0.0);
}

TEST_CASE("comparison domain guards") {
    CHECK_THROWS_AS(make_omega({1.0}), domain_error);
    CHECK_THROWS_AS(make_omega({1.0, -2.0}), domain_error);
    CHECK_THROWS_AS(make_omega({1.0, 1.0}), domain_error);
    CHECK_THROWS_AS(make_omega({1.0, 2.0, 10.0}), domain_error);  // convex bump
    CHECK_THROWS_AS(make_omega({0.1, 2.0}), domain_error); // steeper than the ramp
}

TEST_CASE("strip-piece hyperbolic distance bounds") {
    const double e1 = std::numbers::e;
    const double up = hayman_rect_bound(1.0, e1, 1.0, RectBound::upper);
    CHECK(up == doctest::Approx(kPi * (e1 - 1.0) / 4.0 + kPi / 2.0).epsilon(1e-14));
    CHECK(up == doctest::Approx(2.9203).epsilon(1e-3));

    CHECK(hayman_rect_bound(0.0, 1.4, 0.7, RectBound::lower) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

    const double a1 = 0.3, a2 = 2.2, c = 0.9;
    CHECK(hayman_rect_bound(a1, a2, c, RectBound::upper) ==
          doctest::Approx(hayman_rect_bound(a1, a2, c, RectBound::lower) + kPi)
              .epsilon(1e-14));

    CHECK_THROWS_AS(hayman_rect_bound(1.0, 1.0, 0.5, RectBound::upper),
                    domain_error);
    CHECK_THROWS_AS(hayman_rect_bound(0.0, 1.0, 0.0, RectBound::lower),
                    domain_error);
}

TEST_CASE("hyperbolic gap sandwich") {
    const auto s = poincare_sandwich(0.0, 0.5);
    CHECK(s.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(s.mid == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.hi == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    const auto same = poincare_sandwich(0.3, 0.3);
    CHECK(same.lo == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(same.mid == doctest::Approx(1.0).epsilon(1e-15));

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 0.999);
    for (int trial = 0; trial < 10000; ++trial) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        const auto p = poincare_sandwich(a, b);
        CHECK(p.lo <= p.mid * (1.0 + 1e-12));
        CHECK(p.mid <= p.hi * (1.0 + 1e-12));
    }

    CHECK_THROWS_AS(poincare_sandwich(0.6, 0.5), domain_error);
    CHECK_THROWS_AS(poincare_sandwich(-0.1, 0.5), domain_error);
    CHECK_THROWS_AS(poincare_sandwich(0.2, 1.0), domain_error);
}

TEST_CASE("lens spectrum floor at the tuned ratio") {
    const auto b = lens_lower_bound(0.5, 100);
    CHECK(b.b_theta == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(b.a_theta == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
    CHECK(b.lambda == doctest::Approx(2.0 * std::sqrt(2.0) * kPi).epsilon(1e-14));
    CHECK(b.sigma ==
          doctest::Approx(1.0 - 2.0 * std::sqrt(2.0) * kPi / 10.0).epsilon(1e-13));
    CHECK(b.sigma == doctest::Approx(0.111423).epsilon(1e-4));
    CHECK(b.C_u ==
          doctest::Approx(interpolation_constant_bounds(hadlac_floor(b.sigma)).upper)
              .epsilon(1e-13));
    CHECK(b.C_v ==
          doctest::Approx(interpolation_constant_bounds(boue_floor(b.sigma, 0.5)).upper)
              .epsilon(1e-13));
    CHECK(b.floor ==
          doctest::Approx(0.5 / (b.C_u * b.C_v) * std::pow(b.sigma, 25.0))
              .epsilon(1e-13));
    CHECK(b.floor > 0.0);

    CHECK_NOTHROW(lens_lower_bound(0.5, 79));
    CHECK_THROWS_AS(lens_lower_bound(0.5, 78), domain_error);
    CHECK_THROWS_AS(lens_lower_bound(0.0, 100), domain_error);
    CHECK_THROWS_AS(lens_lower_bound(1.0, 100), domain_error);
    CHECK_THROWS_AS(lens_lower_bound(0.5, 0), domain_error);
}

TEST_CASE("lens spectrum floor optimized over the ratio") {
    const auto tuned = lens_lower_bound(0.5, 100);
    const auto best = lens_lower_bound_best(0.5, 100);
    CHECK(best.floor >= tuned.floor * (1.0 - 1e-9));
    CHECK(best.sigma > 0.0);
    CHECK(best.sigma < 1.0);
    CHECK(best.b_theta == doctest::Approx(tuned.b_theta).epsilon(1e-15));

    // valid at indices far too small for the tuned ratio
    const auto small = lens_lower_bound_best(0.5, 5);
    CHECK(small.floor > 0.0);
    const auto n30 = lens_lower_bound_best(0.5, 30);
    CHECK(n30.floor > 0.0);
    CHECK(n30.floor < 1.0);

    CHECK_THROWS_AS(lens_lower_bound_best(0.5, 0), domain_error);
}

TEST_SUITE_END();
