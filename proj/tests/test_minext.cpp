#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "l2lab/minext.hpp"

using namespace l2lab;

namespace {
BergmanSpace disc_space(int deg) {
    return build_space(make_polydisc({1.0}), WeightSpec::zero(), BasisSpec::monomial(1, deg));
}

double norm2_of(const BergmanSpace& s, const std::vector<cplx>& raw) {
    double v = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i)
        v += std::norm(raw[i]) * std::exp(s.logNorm2[i]);
    return v;
}
}  // namespace

TEST_CASE("jet extraction matches hand-computed derivatives") {
    auto s = disc_space(4);
    // f(z) = 1 + 2 z^2 - z^3
    std::vector<cplx> c = {1.0, 0.0, 2.0, -1.0, 0.0};
    auto jc = jet_of(s, c, {cplx(0.5, 0.0)}, 2);
    // f(0.5) = 1 + 0.5 - 0.125, f'(0.5) = 4*0.5 - 3*0.25, f''(0.5) = 4 - 6*0.5
    std::vector<cplx> want = {cplx(1.375), cplx(1.25), cplx(1.0)};
    REQUIRE(jc.targetJet.size() == 3);
    for (int k = 0; k <= 2; ++k)
        CHECK(std::abs(jc.targetJet[k].second - want[k]) < 1e-13);
}

TEST_CASE("minimal extension satisfies the constraints and is least-norm") {
    auto s = disc_space(8);
    JetConstraint jc;
    jc.z0 = {cplx(0.3, 0.1)};
    jc.m = 1;
    jc.targetJet = {{{0}, cplx(1.0, 0.5)}, {{1}, cplx(-0.7, 0.2)}};
    auto res = minimal_extension(s, jc);
    CHECK(res.constraintResidual < 1e-11);
    CHECK(res.orthogonalityResidual < 1e-11);
    CHECK(res.normSquared == doctest::Approx(norm2_of(s, res.raw)).epsilon(1e-10));

    // perturbing by any feasible direction (vanishing jet) cannot reduce the norm
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> g(s.size());
        for (auto& x : g) x = cplx(u(rng), u(rng));
        // project out the constrained jet by solving for the min-norm correction
        auto gj = jet_of(s, g, jc.z0, jc.m);
        JetConstraint zero = gj;
        auto corr = minimal_extension(s, zero);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= corr.raw[i];
        std::vector<cplx> sum(s.size());
        for (std::size_t i = 0; i < g.size(); ++i) sum[i] = res.raw[i] + 0.1 * g[i];
        CHECK(norm2_of(s, sum) >= res.normSquared - 1e-12);
    }
}

TEST_CASE("unreachable jets raise InfeasibleConstraint") {
    auto s = disc_space(1);  // span{1, z} cannot hit a second derivative
    JetConstraint jc;
    jc.z0 = {cplx(0.0)};
    jc.m = 2;
    jc.targetJet = {{{0}, cplx(0.0)}, {{1}, cplx(0.0)}, {{2}, cplx(1.0)}};
    CHECK_THROWS_AS((void)minimal_extension(s, jc), Error);
}

TEST_CASE("restricted norms scale like the sublevel radius") {
    auto s = disc_space(5);
    auto p = make_pole(s.domain, {cplx(0.0)}, 2.0);
    double t = 1.2, r = std::exp(-t / 2.0);  // sublevel is the disc of radius r
    auto st = restrict_norms(s, *p, t);
    for (int k = 0; k <= 5; ++k) {
        double ref = M_PI * std::pow(r, 2 * k + 2) / (k + 1);
        CHECK(std::exp(st.logNorm2[k]) == doctest::Approx(ref).epsilon(1e-11));
    }
    // off-origin poles are outside the supported radial fast path
    auto p2 = make_pole(s.domain, {cplx(0.5, 0.0)}, 2.0);
    CHECK_THROWS_AS((void)restrict_norms(s, *p2, 1.0), Error);
}

TEST_CASE("minimal integral curve closed form for f = z at the origin") {
    auto s = disc_space(6);
    auto p = make_pole(s.domain, {cplx(0.0)}, 4.0);  // 2(n+m) with n = m = 1
    std::vector<cplx> f(s.size(), cplx(0.0));
    f[1] = 1.0;  // f(z) = z
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(0.3 * i);
    auto curve = minimal_integral_curve(s, *p, f, 1, grid);
    // minimizer is z itself; its norm over the radius-r sublevel is (pi/2) r^4,
    // and the sublevel of 4G at level t has r = e^{-t/4}
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double ref = 0.5 * M_PI * std::exp(-grid[i]);
        CHECK(curve.I[i] == doctest::Approx(ref).epsilon(1e-10));
    }
    auto rep = concavity_report(curve);
    CHECK(rep.maxViolation <= 1e-12);
    CHECK(rep.isNumericallyLinear);
    auto lin = linearity_restriction_check(curve);
    CHECK(lin.applicable);
    CHECK(lin.pass);
}

TEST_CASE("mixed data give strictly concave, non-linear curves") {
    auto s = disc_space(8);
    auto p = make_pole(s.domain, {cplx(0.0)}, 4.0);
    std::vector<cplx> f(s.size(), cplx(0.0));
    f[0] = 1.0;
    f[1] = 1.0;  // f = 1 + z, jet order 1 at the origin
    auto curve = minimal_integral_curve(s, *p, f, 1, default_curve_grid(25));
    // minimizer is 1 + z; over the radius r^{1/4} sublevel the squared norm is
    // pi sqrt(r) + (pi/2) r with r = e^{-t}
    for (std::size_t i = 0; i < curve.t.size(); ++i) {
        double r = std::exp(-curve.t[i]);
        double ref = M_PI * std::sqrt(r) + 0.5 * M_PI * r;
        CHECK(curve.I[i] == doctest::Approx(ref).epsilon(1e-9));
    }
    auto rep = concavity_report(curve);
    CHECK(rep.maxViolation <= 1e-10);
    for (double g : rep.optimalConstantGap) CHECK(g >= -1e-10);
    CHECK(!rep.isNumericallyLinear);
}
