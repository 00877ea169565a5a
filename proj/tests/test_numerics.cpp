#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "l2lab/numerics.hpp"

using namespace l2lab;

TEST_CASE("gauss rule is exact up to degree 2n-1") {
    for (int n : {2, 5, 16}) {
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double v = gauss_integrate([&](double x) { return std::pow(x, k); }, 0.0, 1.0, n);
            CHECK(std::abs(v - 1.0 / (k + 1)) < 1e-14);
        }
    }
    double v = gauss_integrate([](double x) { return std::cos(x); }, 0.0, M_PI / 2, 24);
    CHECK(std::abs(v - 1.0) < 1e-14);
}

TEST_CASE("log radial moments match closed forms") {
    // plain power on [0,1]
    CHECK(std::abs(std::exp(log_radial_moment(3.0, 0.0, 1.0)) - 0.25) < 1e-14);
    // huge power on [0,1]: integral is 1/(p+1), far below double range after exp
    CHECK(std::abs(log_radial_moment(400.0, 0.0, 1.0) + std::log(401.0)) < 1e-12);
    // huge power on [1,8]: (8^802 - 1)/802 in log scale
    double ref = 802.0 * std::log(8.0) + std::log1p(-std::pow(8.0, -802.0)) - std::log(802.0);
    CHECK(std::abs(log_radial_moment(801.0, 1.0, 8.0) - ref) < 1e-12);
    // negative huge power on [1,8]
    double ref2 = std::log((1.0 - std::pow(8.0, -400.0)) / 400.0);
    CHECK(std::abs(log_radial_moment(-401.0, 1.0, 8.0) - ref2) < 1e-12);
    // with a smooth factor, against a plain Gauss oracle
    auto f = [](double r) { return std::exp(-r); };
    double direct = gauss_integrate([&](double r) { return r * r * r * std::exp(-r); }, 0.0, 1.0, 40);
    CHECK(std::abs(std::exp(log_radial_moment(3.0, 0.0, 1.0, f)) - direct) < 1e-13);
    // non-integrable endpoint
    CHECK_THROWS_AS((void)log_radial_moment(-1.5, 0.0, 1.0), Error);
}

TEST_CASE("pairwise summation matches long double accumulation") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(100000);
    long double acc = 0.0L;
    for (auto& x : v) {
        x = u(rng);
        acc += static_cast<long double>(x);
    }
    CHECK(std::abs(pairwise_sum(v) - static_cast<double>(acc)) < 1e-10);
}

TEST_CASE("extrapolation recovers polynomial limits") {
    std::vector<std::pair<double, double>> s;
    for (double h : {0.4, 0.2, 0.1, 0.05}) s.emplace_back(h, 3.0 + 2.0 * h + h * h);
    auto [L, err] = extrapolate_to_zero(s);
    CHECK(std::abs(L - 3.0) < 1e-12);
    CHECK(err < 1e-10);
}

TEST_CASE("1-D search utilities") {
    double x = golden_max([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-10);
    CHECK(std::abs(x - 0.3) < 1e-8);
    double y = golden_min([](double t) { return (t - 0.7) * (t - 0.7); }, 0.0, 1.0, 1e-10);
    CHECK(std::abs(y - 0.7) < 1e-8);
    double z = bisect([](double t) { return std::cos(t); }, 0.0, 3.0, 1e-12);
    CHECK(std::abs(z - M_PI / 2) < 1e-10);
}
