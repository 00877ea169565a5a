#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "l2lab/domain.hpp"
#include "l2lab/green.hpp"

using namespace l2lab;

TEST_CASE("membership and bounding radii") {
    auto ball = make_unit_ball(2);
    CHECK(contains(*ball, {cplx(0.5, 0.0), cplx(0.5, 0.5)}));
    CHECK(!contains(*ball, {cplx(0.9, 0.0), cplx(0.5, 0.0)}));
    auto pd = make_polydisc({1.0, 2.0});
    CHECK(contains(*pd, {cplx(0.9, 0.0), cplx(1.9, 0.0)}));
    CHECK(!contains(*pd, {cplx(1.1, 0.0), cplx(0.0, 0.0)}));
    CHECK(bounding_radius(*pd) == doctest::Approx(2.0));
    auto an = make_annulus(3.0);
    CHECK(contains(*an, {cplx(2.0, 0.0)}));
    CHECK(!contains(*an, {cplx(0.5, 0.0)}));
    CHECK_THROWS_AS((void)make_annulus(0.9), Error);
}

TEST_CASE("exact volumes and Monte Carlo agreement") {
    CHECK(volume(*make_unit_ball(2), VolumeMethod::Exact).value ==
          doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-12));
    CHECK(volume(*make_polydisc({1.0, 0.5}), VolumeMethod::Exact).value ==
          doctest::Approx(M_PI * M_PI * 0.25).epsilon(1e-12));
    CHECK(volume(*make_annulus(2.0), VolumeMethod::Exact).value ==
          doctest::Approx(3.0 * M_PI).epsilon(1e-12));
    auto mc = volume(*make_unit_ball(2), VolumeMethod::MonteCarlo, 123);
    CHECK(std::abs(mc.value - M_PI * M_PI / 2.0) < 4.0 * mc.errorBound);
}

TEST_CASE("circled quadrature integrates monomials exactly") {
    auto d = make_polydisc({1.0});
    auto q = quadrature_for(*d, WeightSpec::zero(), 6);
    for (int k = 0; k <= 6; ++k) {
        double v = q.integrate([&](const cvec& z) { return std::pow(std::abs(z[0]), 2 * k); });
        CHECK(std::abs(v - M_PI / (k + 1)) < 1e-12);
    }
    // cross terms vanish
    double cross = q.integrate([&](const cvec& z) {
        return (z[0] * std::conj(z[0] * z[0])).real();
    });
    CHECK(std::abs(cross) < 1e-12);
}

TEST_CASE("weighted radial rules") {
    auto d = make_polydisc({1.0});
    // weight |z|^{-2 alpha} with alpha = 1/2: integral of |z^k|^2 is 2 pi/(2k+1)
    auto q = quadrature_for(*d, WeightSpec::radial_log(0.5), 5);
    for (int k = 1; k <= 5; ++k) {
        double v = q.integrate([&](const cvec& z) { return std::pow(std::abs(z[0]), 2 * k); });
        CHECK(std::abs(v - 2.0 * M_PI / (2.0 * k + 1.0)) < 1e-12);
    }
}

TEST_CASE("ball quadrature reproduces factorial moment formula") {
    auto d = make_unit_ball(2);
    auto q = quadrature_for(*d, WeightSpec::zero(), 5);
    auto fact = [](int n) { double v = 1; for (int i = 2; i <= n; ++i) v *= i; return v; };
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b) {
            double v = q.integrate([&](const cvec& z) {
                return std::pow(std::abs(z[0]), 2 * a) * std::pow(std::abs(z[1]), 2 * b);
            });
            double ref = M_PI * M_PI * fact(a) * fact(b) / fact(2 + a + b);
            CHECK(std::abs(v - ref) < 1e-12 * (1.0 + ref));
        }
}

TEST_CASE("annulus quadrature matches Laurent moments") {
    auto d = make_annulus(2.0);
    auto q = quadrature_for(*d, WeightSpec::zero(), 4);
    for (int k = -4; k <= 4; ++k) {
        double v = q.integrate([&](const cvec& z) { return std::pow(std::abs(z[0]), 2 * k); });
        double ref = (k == -1) ? 2.0 * M_PI * std::log(2.0)
                               : M_PI * (std::pow(2.0, 2 * k + 2) - 1.0) / (k + 1);
        CHECK(std::abs(v - ref) < 1e-12 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("balanced domains require a homogeneous gauge") {
    CHECK_THROWS_AS((void)make_balanced(1, [](const cvec& z) { return std::abs(z[0]) + 0.1; }),
                    Error);
    auto ok = make_balanced(2, [](const cvec& z) {
        return std::max(std::abs(z[0]), std::abs(z[1]));
    });
    CHECK(contains(*ok, {cplx(0.9, 0.0), cplx(0.0, 0.9)}));
}

TEST_CASE("sublevel discs of the Green function have exact volumes") {
    auto d = make_polydisc({1.0});
    auto p = make_pole(d, {cplx(0.0)}, 2.0);
    for (double a : {0.5, 2.0})
        CHECK(sublevel_volume(*p, a) == doctest::Approx(M_PI * std::exp(-a)).epsilon(1e-10));
    // off-centre pole: Moebius disc of radius tau (1-|w|^2)/(1 - tau^2 |w|^2)
    auto p2 = make_pole(d, {cplx(0.4, 0.0)}, 2.0);
    double a = 1.5, tau = std::exp(-a / 2.0);
    double rho = tau * (1.0 - 0.16) / (1.0 - tau * tau * 0.16);
    CHECK(sublevel_volume(*p2, a) == doctest::Approx(M_PI * rho * rho).epsilon(1e-9));
}
