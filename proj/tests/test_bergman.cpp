#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "l2lab/bergman.hpp"

using namespace l2lab;

TEST_CASE("monomial norms on the disc") {
    auto s = build_space(make_polydisc({1.0}), WeightSpec::zero(), BasisSpec::monomial(1, 6));
    REQUIRE(s.size() == 7);
    CHECK(s.diagonal);
    for (int k = 0; k <= 6; ++k)
        CHECK(s.norm2[k] == doctest::Approx(M_PI / (k + 1)).epsilon(1e-13));
}

TEST_CASE("ball norms follow the factorial formula") {
    auto s = build_space(make_unit_ball(2), WeightSpec::zero(), BasisSpec::monomial(2, 3));
    auto fact = [](int n) { double v = 1; for (int i = 2; i <= n; ++i) v *= i; return v; };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& a = s.basis.indices[i];
        double ref = M_PI * M_PI * fact(a[0]) * fact(a[1]) / fact(2 + a[0] + a[1]);
        CHECK(s.norm2[i] == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("Laurent norms stay finite in log scale for huge exponents") {
    auto s = build_space(make_annulus(8.0), WeightSpec::zero(), BasisSpec::laurent(-200, 200));
    for (std::size_t i = 0; i < s.size(); ++i) {
        int k = s.basis.indices[i][0];
        double ref = (k == -1) ? std::log(2.0 * M_PI * std::log(8.0))
                               : std::log(M_PI / std::abs(k + 1.0)) +
                                     ((k >= 0) ? (2.0 * k + 2.0) * std::log(8.0) +
                                                     std::log1p(-std::pow(8.0, -2.0 * k - 2.0))
                                               : std::log1p(-std::pow(8.0, 2 * k + 2)));
        CHECK(std::isfinite(s.logNorm2[i]));
        // absolute tolerance on the log = relative tolerance on the norm
        CHECK(std::abs(s.logNorm2[i] - ref) < 1e-9);
    }
}

TEST_CASE("orthonormality against an independent quadrature") {
    auto d = make_annulus(2.0);
    auto s = build_space(d, WeightSpec::zero(), BasisSpec::laurent(-3, 3));
    auto q = quadrature_for(*d, WeightSpec::zero(), 4);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j) {
            double re = q.integrate([&](const cvec& z) {
                return (s.eval_orthonormal(i, z) * std::conj(s.eval_orthonormal(j, z))).real();
            });
            CHECK(std::abs(re - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("disc kernel closed form") {
    auto s = build_space(make_polydisc({1.0}), WeightSpec::zero(), BasisSpec::monomial(1, 160));
    for (double r : {0.0, 0.4, 0.7}) {
        double ref = 1.0 / (M_PI * std::pow(1.0 - r * r, 2));
        CHECK(kernel_at(s, {cplx(r, 0.0)}, {cplx(r, 0.0)}).diagonal ==
              doctest::Approx(ref).epsilon(1e-10));
    }
    // off-diagonal value 1/(pi (1 - w-bar z)^2)
    cplx z(0.3, 0.2), w(0.1, -0.4);
    cplx ref = 1.0 / (M_PI * std::pow(1.0 - std::conj(w) * z, 2));
    cplx got = kernel_at(s, {z}, {w}).value;
    CHECK(std::abs(got - ref) < 1e-10);
}

TEST_CASE("bidisc kernel is the product of factor kernels") {
    auto f = build_space(make_polydisc({1.0}), WeightSpec::zero(), BasisSpec::monomial(1, 60));
    auto s = product_space(f, f);
    cvec z = {cplx(0.3, 0.0), cplx(-0.2, 0.1)};
    double ref = 1.0 / (M_PI * std::pow(1.0 - std::norm(z[0]), 2)) * 1.0 /
                 (M_PI * std::pow(1.0 - std::norm(z[1]), 2));
    CHECK(kernel_at(s, z, z).diagonal == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("derivatives of orthonormal elements match finite differences") {
    auto s = build_space(make_annulus(2.0), WeightSpec::zero(), BasisSpec::laurent(-4, 4));
    const double h = 1e-5;
    cvec z = {cplx(1.4, 0.3)};
    for (std::size_t i = 0; i < s.size(); ++i) {
        cplx d1 = s.deriv_orthonormal(i, {1}, z);
        cplx fd = (s.eval_orthonormal(i, {z[0] + h}) - s.eval_orthonormal(i, {z[0] - h})) /
                  (2.0 * h);
        CHECK(std::abs(d1 - fd) < 1e-7 * (1.0 + std::abs(d1)));
    }
}

TEST_CASE("jet kernels reproduce derivative kernel closed forms") {
    auto s = build_space(make_polydisc({1.0}), WeightSpec::zero(), BasisSpec::monomial(1, 200));
    auto fact = [](int n) { double v = 1; for (int i = 2; i <= n; ++i) v *= i; return v; };
    for (int m : {0, 1, 2, 3}) {
        // at the centre: sup |f^(m)(0)|^2 over vanishing f = (m!)^2 (m+1)/pi
        double ref0 = fact(m) * fact(m) * (m + 1) / M_PI;
        CHECK(jet_kernel(s, JetFunctional::derivative({cplx(0.0)}, m)) ==
              doctest::Approx(ref0).epsilon(1e-10));
        // off-centre: pi B^(m)(z0) = m!(m+1)! c^{2m+2} with c = 1/(1-|z0|^2)
        double c = 1.0 / (1.0 - 0.16);
        double ref = fact(m) * fact(m + 1) * std::pow(c, 2 * m + 2) / M_PI;
        CHECK(jet_kernel(s, JetFunctional::derivative({cplx(0.4, 0.0)}, m)) ==
              doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("Gram-matrix path on a balanced domain matches the circled answer") {
    // the max-gauge bidisc routed through sampling + orthonormalization
    auto bal = make_balanced(1, [](const cvec& z) { return std::abs(z[0]); });
    auto s = build_space(bal, WeightSpec::zero(), BasisSpec::monomial(1, 4));
    CHECK(!s.diagonal);
    // Monte Carlo Gram: tolerance set by the sampling diagnostic
    cvec z = {cplx(0.3, 0.1)};
    double ref = 1.0 / (M_PI * std::pow(1.0 - std::norm(z[0]), 2));
    auto kr = kernel_at(s, z, z);
    // degree-4 truncation of the disc kernel at |z| ~ 0.316
    double trunc = 0.0;
    for (int k = 0; k <= 4; ++k) trunc += (k + 1) * std::pow(std::norm(z[0]), k) / M_PI;
    CHECK(std::abs(kr.diagonal - trunc) < 0.05 * trunc);
    CHECK(trunc < ref);
}

TEST_CASE("non-radial weights on multi-dimensional polydiscs are rejected") {
    CHECK_THROWS_AS((void)build_space(make_polydisc({1.0, 1.0}), WeightSpec::radial_log(0.5),
                                      BasisSpec::monomial(2, 2)),
                    Error);
}
