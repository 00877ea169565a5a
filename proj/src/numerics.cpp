#include "l2lab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace l2lab {

namespace {

GaussRule compute_gauss(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double eps = 1e-15;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < eps) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw Error("InvalidParameter", "gauss_legendre: n < 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& g = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> terms(g.x.size());
    for (size_t i = 0; i < g.x.size(); ++i) terms[i] = g.w[i] * f(mid + half * g.x[i]);
    return half * pairwise_sum(terms);
}

double log_radial_moment(double p, double r0, double r1,
                         const std::function<double(double)>& factor) {
    if (!(r1 > r0) || r0 < 0.0) throw Error("InvalidParameter", "log_radial_moment: bad interval");
    if (r0 == 0.0 && p <= -1.0) throw Error("InvalidParameter", "log_radial_moment: divergent at 0");

    // Scale so the transformed integrand is O(1): pull out r^p at the endpoint
    // where |r^p| is largest.
    const double rs = (p >= 0.0) ? r1 : (r0 > 0.0 ? r0 : r1);
    const double logscale = p * std::log(rs);

    auto scaled = [&](double r) {
        double v = std::exp(p * (std::log(r) - std::log(rs)));
        return factor ? v * factor(r) : v;
    };

    double acc;
    if (r0 == 0.0) {
        // r = r1 * u^4 keeps integer powers polynomial and tames p in (-1,0).
        const int q = 4;
        auto g = [&](double u) {
            double r = r1 * std::pow(u, q);
            return scaled(r) * r1 * q * std::pow(u, q - 1);
        };
        int deg = (p >= 0 && p == std::floor(p)) ? q * (static_cast<int>(p) + 1) : 0;
        int n = std::max(64, deg / 2 + 4);
        acc = gauss_integrate(g, 0.0, 1.0, std::min(n, 400));
    } else {
        // For steep powers the scaled integrand decays like e^{-|p| |log(r/rs)|};
        // restrict to the log-window of width 45/|p| around rs (tail < e^{-45}
        // relative) so a fixed-order rule always resolves the boundary layer.
        double a = r0, b = r1;
        if (std::abs(p) > 1.0) {
            const double width = 45.0 / std::abs(p);
            if (p < 0.0)
                b = std::min(r1, r0 * std::exp(width));
            else
                a = std::max(r0, r1 * std::exp(-width));
        }
        // After windowing the effective degree is bounded (exponent variation
        // <= 45 across the interval), so two 96-point panels always suffice;
        // they also stay exact for the un-windowed low-degree polynomial case.
        const double mid = 0.5 * (a + b);
        acc = gauss_integrate(scaled, a, mid, 96) + gauss_integrate(scaled, mid, b, 96);
    }
    if (!(acc > 0.0)) throw Error("NonConvergent", "log_radial_moment: nonpositive integral");
    return logscale + std::log(acc);
}

double pairwise_sum(const std::vector<double>& v) {
    std::function<double(size_t, size_t)> rec = [&](size_t lo, size_t hi) -> double {
        if (hi - lo <= 8) {
            double s = 0.0;
            for (size_t i = lo; i < hi; ++i) s += v[i];
            return s;
        }
        size_t mid = lo + (hi - lo) / 2;
        return rec(lo, mid) + rec(mid, hi);
    };
    return v.empty() ? 0.0 : rec(0, v.size());
}

std::pair<double, double> extrapolate_to_zero(std::vector<std::pair<double, double>> s) {
    if (s.empty()) throw Error("InvalidParameter", "extrapolate_to_zero: no samples");
    std::sort(s.begin(), s.end(),
              [](const auto& a, const auto& b) { return std::abs(a.first) > std::abs(b.first); });
    const size_t n = s.size();
    std::vector<double> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = s[i].second;
    double last = t[n - 1], corr = 0.0;
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i) {
            const double h0 = s[i].first, h1 = s[i + k].first;
            t[i] = t[i + 1] + (t[i + 1] - t[i]) * h1 / (h0 - h1);
        }
        corr = std::abs(t[0] - last);
        last = t[0];
    }
    return {t[0], std::max(corr, 1e-16 * std::abs(t[0]))};
}

namespace {
const double kGolden = 0.5 * (3.0 - std::sqrt(5.0));

double golden_opt(const std::function<double(double)>& f, double lo, double hi, double xtol,
                  bool maximize) {
    double a = lo, b = hi;
    double x1 = a + kGolden * (b - a);
    double x2 = b - kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        bool keep_left = maximize ? (f1 > f2) : (f1 < f2);
        if (keep_left) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - kGolden * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}
}  // namespace

double golden_max(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    return golden_opt(f, lo, hi, xtol, true);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    return golden_opt(f, lo, hi, xtol, false);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw Error("InvalidParameter", "bisect: no sign change");
    while (hi - lo > xtol) {
        double mid = 0.5 * (lo + hi), fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace l2lab
