#include "l2lab/auxfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace l2lab {

double CFamily::operator()(double t) const {
    switch (kind) {
        case Kind::One:
            return 1.0;
        case Kind::ExpT:
            return std::exp(t);
        case Kind::Piecewise:
            return t < 1.0 ? 1.0 : std::exp(t - 1.0);
        case Kind::Rational: {
            const double mp = m + p;
            return std::exp(t) / std::pow(1.0 + std::exp(t / mp), mp + eps);
        }
    }
    return 1.0;
}

std::vector<double> CFamily::kinks(double lo, double hi) const {
    std::vector<double> k;
    if (kind == Kind::Piecewise && lo < 1.0 && 1.0 < hi) k.push_back(1.0);
    return k;
}

CFamily CFamily::exp_t() {
    CFamily c;
    c.kind = Kind::ExpT;
    return c;
}

CFamily CFamily::piecewise() {
    CFamily c;
    c.kind = Kind::Piecewise;
    return c;
}

CFamily CFamily::rational(int m, int p, double eps) {
    if (m < 0 || p < 1 || !(eps > 0.0)) throw Error("InvalidParameters", "rational c family");
    CFamily c;
    c.kind = Kind::Rational;
    c.m = m;
    c.p = p;
    c.eps = eps;
    return c;
}

namespace {

// panelized Gauss integration of a piecewise-smooth function
double integrate_pw(const std::function<double(double)>& f, double lo, double hi,
                    const std::vector<double>& kinks) {
    if (hi <= lo) return 0.0;
    std::vector<double> cuts = {lo};
    for (double k : kinks)
        if (k > lo && k < hi) cuts.push_back(k);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> parts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        int sub = std::max(1, static_cast<int>(std::ceil((b - a) / 4.0)));
        for (int j = 0; j < sub; ++j)
            parts.push_back(gauss_integrate(f, a + (b - a) * j / sub,
                                            a + (b - a) * (j + 1) / sub, 64));
    }
    return pairwise_sum(parts);
}

}  // namespace

void check_admissible(const CFamily& c, double lo, double hi, int gridPoints) {
    if (!(hi > lo)) throw Error("InvalidParameter", "empty admissibility interval");
    auto kk = c.kinks(lo, hi);
    auto I1 = [&](double t) { return integrate_pw([&](double x) { return c(x); }, t, hi, kk); };
    // growth condition: c(t) e^{-t} stays bounded away from 0 near the left end
    for (double t : {lo, lo + 0.1 * (hi - lo), lo + 0.2 * (hi - lo)})
        if (!(c(t) * std::exp(-t) > 1e-12))
            throw Error("InadmissibleC", "c(t) e^{-t} not bounded below");
    double total = I1(lo);
    if (!std::isfinite(total)) throw Error("InadmissibleC", "integral of c diverges");
    for (int i = 0; i < gridPoints; ++i) {
        double t = lo + (hi - lo) * (i + 0.5) / gridPoints;
        double a1 = I1(t);
        double a2 = integrate_pw(I1, t, hi, kk);
        if (!(a1 * a1 > c(t) * a2))
            throw Error("InadmissibleC", "strict square-integral inequality fails");
    }
}

double AuxTriple::I1(double t) const {
    auto kk = c.kinks(t, a + 1.0);
    return integrate_pw([&](double x) { return c(x); }, t, a + 1.0, kk);
}

double AuxTriple::I2(double t) const {
    auto kk = c.kinks(t, a + 1.0);
    return integrate_pw([&](double x) { return I1(x); }, t, a + 1.0, kk);
}

double AuxTriple::u(double t) const { return a - std::log(I1(t)); }
double AuxTriple::s(double t) const { return I2(t) / I1(t); }
double AuxTriple::g(double t) const {
    double a1 = I1(t), a2 = I2(t), ct = c(t);
    return (a1 * a1 - ct * a2) / (ct * a1);
}

AuxTriple build_aux_triple(const CFamily& c, double a) {
    if (!(a > 0.0)) throw Error("InvalidParameter", "aux triple needs a > 0");
    check_admissible(c, 1e-9, a + 1.0 - 1e-9, 64);
    AuxTriple t;
    t.a = a;
    t.c = c;
    return t;
}

OdeResiduals verify_ode_identities(const AuxTriple& tri, int grid) {
    if (grid < 2) throw Error("InvalidGrid", "identity grid needs >= 2 points");
    const double lo = 0.0, hi = tri.a + 1.0;
    auto kk = tri.c.kinks(lo, hi);
    // u and s have a logarithmic singularity at the right endpoint (where the
    // tail integral vanishes); keep a fixed margin there and scale the stencil
    // step with the distance so the h^4 truncation term stays below 1e-9.
    auto margin = [&](double t) {
        double d = std::min(t - lo, hi - t);
        for (double k : kk) d = std::min(d, std::abs(t - k));
        return d;
    };
    auto d1 = [&](const std::function<double(double)>& f, double t, double h) {
        return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
    };
    auto d2 = [&](const std::function<double(double)>& f, double t, double h) {
        return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) /
               (12 * h * h);
    };
    auto fu = [&](double x) { return tri.u(x); };
    auto fs = [&](double x) { return tri.s(x); };
    OdeResiduals res;
    for (int i = 0; i < grid; ++i) {
        double t = lo + (hi - lo) * (i + 0.5) / grid;
        if (hi - t < 0.3 || margin(t) < 0.05) continue;
        const double h = std::min(0.01, 0.005 * margin(t));
        double up = d1(fu, t, h), sp = d1(fs, t, h);
        double upp = d2(fu, t, h), spp = d2(fs, t, h);
        double sv = tri.s(t), gv = tri.g(t);
        res.first = std::max(res.first, std::abs(sv * up - sp - 1.0));
        res.second = std::max(res.second, std::abs(sv * upp - spp - sp * sp / gv));
        res.closure =
            std::max(res.closure, std::abs(std::exp(tri.a - tri.u(t)) / (sv + gv) - tri.c(t)));
    }
    return res;
}

Chi Chi::linear() {
    Chi c;
    c.chi = [](double t) { return 1.0 - t; };
    c.dchi = [](double) { return -1.0; };
    return c;
}

Chi Chi::kappa_profile(double kappa) {
    Chi c;
    const double ek = std::exp(kappa);
    c.chi = [kappa, ek](double t) { return (ek - std::exp(kappa * t)) / (ek - 1.0); };
    c.dchi = [kappa, ek](double t) { return -kappa * std::exp(kappa * t) / (ek - 1.0); };
    return c;
}

double constant_C(const Chi& chi, const CFamily& c, double a) {
    if (a < 0.0) throw Error("InvalidParameter", "constant_C needs a >= 0");
    auto kk = c.kinks(0.0, a + 1.0);
    auto I1 = [&](double t) {
        return integrate_pw([&](double x) { return c(x); }, t, a + 1.0, kk);
    };
    auto value = [&](double t) {
        double ct = c(t);
        if (!(ct > t)) throw Error("DenominatorVanishes", "c(t) - t vanishes on (0,1)");
        double dc = chi.dchi(t), xv = chi.chi(t);
        return dc * dc * I1(t) + ct / (ct - t) * xv * xv;
    };
    const int G = 10000;
    double best = -std::numeric_limits<double>::infinity(), bestT = 0.0;
    for (int i = 0; i <= G; ++i) {
        double t = std::max(1e-12, std::min(1.0 - 1e-12, static_cast<double>(i) / G));
        double v = value(t);
        if (v > best) {
            best = v;
            bestT = t;
        }
    }
    double lo = std::max(1e-12, bestT - 1.0 / G), hi = std::min(1.0 - 1e-12, bestT + 1.0 / G);
    double tr = golden_max(value, lo, hi, 1e-12);
    return std::max(best, value(tr));
}

KappaResult kappa_constant(double a) {
    if (!(a >= 1.0)) throw Error("InvalidParameter", "kappa bound needs a >= 1");
    const double target = std::sqrt(1.0 - std::exp(-a));
    auto f = [&](double k) { return k / std::expm1(k) - target; };
    KappaResult res;
    res.kappa = bisect(f, 1e-12, 60.0, 1e-12);
    const double ek = std::exp(res.kappa);
    const double q = res.kappa * ek / (ek - 1.0);
    res.boundValue = std::exp(a) + q * q - 1.0;
    res.boundTarget = std::exp(a) + (25.0 / 16.0) * std::exp(-a);
    res.boundHolds = res.boundValue < res.boundTarget;
    return res;
}

double demext_constant(int m, int p, double eps) {
    if (p < 1 || m < 0 || !(eps > 0.0))
        throw Error("InvalidParameters", "need p >= 1, m >= 0, eps > 0");
    boost::math::quadrature::tanh_sinh<double> integ;
    // Split the Beta integral at 1/2 and reflect the upper half so that each
    // piece is singular only at 0, where tanh-sinh abscissas are exact.
    auto lower = [&](double tau) {
        return std::pow(tau, m + p - 1.0) * std::pow(1.0 - tau, eps - 1.0);
    };
    auto upper = [&](double u) {
        return std::pow(u, eps - 1.0) * std::pow(1.0 - u, m + p - 1.0);
    };
    double den = integ.integrate(lower, 0.0, 0.5, 1e-12);
    double rest = integ.integrate(upper, 0.0, 0.5, 1e-12);
    return 1.0 + rest / den;
}

std::pair<double, double> smoothing_eval(double a, double b, double t) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error("InvalidParameter", "smoothing needs a, b > 0");
    if (t >= -a) return {t, 0.0};
    if (t <= -a - b) return {-a - 0.5 * b, 1.0};
    double v = (t * t + 2.0 * (a + b) * t + a * a) / (2.0 * b);
    double vp = (t + a + b) / b;
    return {v, 1.0 - vp};
}

}  // namespace l2lab
