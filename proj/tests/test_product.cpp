#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "l2lab/product.hpp"

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

std::vector<cplx> random_coeffs(const BergmanSpace& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> c(s.size());
    for (auto& x : c) x = cplx(u(rng), u(rng));
    return c;
}
}  // namespace

TEST_CASE("projection onto vanishing subspaces") {
    auto s = disc_space(8);
    std::mt19937_64 rng(5);
    std::vector<cvec> S = {{cplx(0.3, 0.1)}, {cplx(-0.4, 0.0)}};
    auto f = random_coeffs(s, rng);
    auto pf = project_vanishing(s, S, 2, f);

    // projected function vanishes to order 1 at every point of S
    for (const auto& z : S) {
        auto jc = jet_of(s, pf, z, 1);
        for (auto& [beta, val] : jc.targetJet) CHECK(std::abs(val) < 1e-10);
    }
    // idempotent
    auto ppf = project_vanishing(s, S, 2, pf);
    for (std::size_t i = 0; i < pf.size(); ++i) CHECK(std::abs(ppf[i] - pf[i]) < 1e-10);
    // m = -1 is the identity
    auto idf = project_vanishing(s, S, -1, f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(idf[i] - f[i]) < 1e-13);
}

TEST_CASE("layer decomposition is orthogonal and reconstructs f") {
    auto s = disc_space(10);
    std::mt19937_64 rng(9);
    std::vector<cvec> S = {{cplx(0.2, 0.0)}, {cplx(-0.3, 0.2)}};
    auto f = random_coeffs(s, rng);
    auto dec = layer_decompose(s, S, 3, f);
    CHECK(dec.orthogonalityResidual < 1e-10);
    CHECK(dec.reconstructionResidual < 1e-10);

    // Pythagoras: squared norms of the layers sum to the squared norm of f
    double total = norm2_of(s, dec.remainder);
    for (const auto& comp : dec.components) total += norm2_of(s, comp);
    CHECK(total == doctest::Approx(norm2_of(s, f)).epsilon(1e-10));
}

TEST_CASE("product minimal extensions dominate the tensor of the factors") {
    auto left = disc_space(6);
    auto right = disc_space(6);
    std::mt19937_64 rng(17);
    cvec s1 = {cplx(0.2, 0.1)};
    cvec s2 = {cplx(-0.3, 0.05)};
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        auto f1 = random_coeffs(left, rng);
        auto f2 = random_coeffs(right, rng);
        auto rep = product_min_extension_check(left, right, f1, f2, s1, s2, 1 + trial % 2,
                                               trial % 2);
        worst = std::min(worst, rep.margin);
    }
    CHECK(worst >= -1e-10);
}

TEST_CASE("equality holds when both factors vanish to the matching order") {
    auto left = disc_space(6);
    auto right = disc_space(6);
    cvec s1 = {cplx(0.2, 0.1)};
    cvec s2 = {cplx(-0.3, 0.05)};
    // f1 = (z - s1)^2 q1, f2 = (z - s2) q2 with m1 = 2, m2 = 1
    auto shift_pow = [](cplx s, int m, std::vector<cplx> q, std::size_t n) {
        std::vector<cplx> poly = q;
        for (int rep = 0; rep < m; ++rep) {
            std::vector<cplx> next(poly.size() + 1, cplx(0.0));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= s * poly[i];
            }
            poly = next;
        }
        poly.resize(n, cplx(0.0));
        return poly;
    };
    auto f1 = shift_pow(s1[0], 2, {cplx(1.0), cplx(0.5, 0.2)}, left.size());
    auto f2 = shift_pow(s2[0], 1, {cplx(0.7, -0.1), cplx(0.0), cplx(0.3)}, right.size());
    auto rep = product_min_extension_check(left, right, f1, f2, s1, s2, 2, 1);
    CHECK(rep.equalityExpected);
    CHECK(std::abs(rep.margin) < 1e-10 * (1.0 + rep.normF));
    CHECK(rep.tensorMismatch < 1e-10);
    CHECK(rep.normF == doctest::Approx(rep.normF1 * rep.normF2).epsilon(1e-10));
}

TEST_CASE("norms multiply across product spaces") {
    auto left = disc_space(4);
    auto right = disc_space(3);
    auto prod = product_space(left, right);
    std::mt19937_64 rng(21);
    auto f1 = random_coeffs(left, rng);
    auto f2 = random_coeffs(right, rng);
    std::vector<cplx> f(prod.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            f[i * right.size() + j] = f1[i] * f2[j];
    CHECK(norm2_of(prod, f) ==
          doctest::Approx(norm2_of(left, f1) * norm2_of(right, f2)).epsilon(1e-10));
}
