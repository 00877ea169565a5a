#include "l2lab/suites.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>

#include "l2lab/auxfun.hpp"
#include "l2lab/minext.hpp"
#include "l2lab/product.hpp"
#include "l2lab/suita.hpp"

namespace l2lab {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

void validate_keys(const json& cfg, std::initializer_list<const char*> allowed) {
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw Error("ConfigError", "unknown config key '" + it.key() + "'");
    }
}

struct SuiteCtx {
    SuiteReport rep;
    json cfg;
    std::mt19937_64 rng;
    int grid = 33;

    bool has_part(const std::string& p) const {
        if (!cfg.contains("parts")) return true;
        for (const auto& v : cfg.at("parts"))
            if (v.get<std::string>() == p) return true;
        return false;
    }
    std::vector<double> num_list(const char* key, std::vector<double> def) const {
        if (!cfg.contains(key)) return def;
        return cfg.at(key).get<std::vector<double>>();
    }
    int num(const char* key, int def) const {
        return cfg.contains(key) ? cfg.at(key).get<int>() : def;
    }
    cplx rand_coeff() {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double re = u(rng), im = u(rng);
        return {re, im};
    }
    std::vector<cplx> rand_poly(std::size_t terms, std::size_t padded) {
        std::vector<cplx> f(padded, cplx(0.0));
        for (std::size_t k = 0; k < terms && k < padded; ++k) f[k] = rand_coeff();
        return f;
    }
};

void add_eq(SuiteReport& r, const std::string& name, double computed, double reference,
            double tol, const std::string& prov) {
    r.checks.push_back({name, computed, reference, tol,
                        std::isfinite(computed) && std::abs(computed - reference) <= tol, prov});
}

// pass when computed <= bound
void add_le(SuiteReport& r, const std::string& name, double computed, double bound,
            const std::string& prov) {
    r.checks.push_back({name, computed, bound, 0.0, computed <= bound, prov});
}

// pass when computed >= bound
void add_ge(SuiteReport& r, const std::string& name, double computed, double bound,
            const std::string& prov) {
    r.checks.push_back({name, computed, bound, 0.0, computed >= bound, prov});
}

template <class F>
void guarded(SuiteReport& rep, const std::string& name, F&& f) {
    try {
        f();
    } catch (const Error& e) {
        rep.checks.push_back({name, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, false,
                              std::string("aborted: ") + e.what()});
        if (e.tag() == "NonConvergent") rep.nonConvergent = true;
    } catch (const std::exception& e) {
        rep.checks.push_back({name, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, false,
                              std::string("aborted: ") + e.what()});
    }
}

cplx eval_poly(const std::vector<std::vector<int>>& indices, const std::vector<cplx>& coeffs,
               const cvec& z) {
    cplx v(0.0);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        cplx t = coeffs[i];
        for (std::size_t j = 0; j < z.size(); ++j)
            for (int k = 0; k < indices[i][j]; ++k) t *= z[j];
        v += t;
    }
    return v;
}

// coefficients of (z - s)^m * q(z) in the monomial basis, padded to `dim`
std::vector<cplx> shifted_vanishing_poly(SuiteCtx& c, cplx s, int m, int qdeg, std::size_t dim) {
    std::vector<cplx> f = {cplx(1.0)};
    for (int i = 0; i < m; ++i) {
        std::vector<cplx> g(f.size() + 1, cplx(0.0));
        for (std::size_t k = 0; k < f.size(); ++k) {
            g[k + 1] += f[k];
            g[k] -= s * f[k];
        }
        f = g;
    }
    std::vector<cplx> q(qdeg + 1);
    for (auto& v : q) v = c.rand_coeff();
    std::vector<cplx> out(dim, cplx(0.0));
    for (std::size_t k = 0; k < f.size(); ++k)
        for (std::size_t l = 0; l < q.size(); ++l)
            if (k + l < dim) out[k + l] += f[k] * q[l];
    return out;
}

// ---------------------------------------------------------------------------

void suite_sharpness(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "a_values", "m_values", "homogeneous",
                          "battery"});
    auto avals = c.num_list("a_values", {0.5, 1.0, 2.0, 5.0});
    auto mvals = c.num_list("m_values", {0, 1, 2, 3});
    bool homogeneous = c.cfg.contains("homogeneous") ? c.cfg.at("homogeneous").get<bool>() : true;
    int battery = c.num("battery", 50);

    if (homogeneous) {
        for (int n : {1, 2}) {
            for (double md : mvals) {
                int m = static_cast<int>(md);
                guarded(c.rep, "homogeneous_n" + std::to_string(n) + "_m" + std::to_string(m),
                        [&] {
                            auto dom = (n == 1) ? make_polydisc({1.0}) : make_unit_ball(2);
                            auto s = build_space(dom, WeightSpec::zero(),
                                                 BasisSpec::monomial(n, m + 2));
                            std::vector<cplx> f(s.size(), cplx(0.0));
                            int j = 0;
                            for (std::size_t i = 0; i < s.size(); ++i) {
                                int deg = 0;
                                for (int e : s.basis.indices[i]) deg += e;
                                if (deg == m) f[i] = cplx(1.0 + 0.25 * j, 0.1 * j), ++j;
                            }
                            auto p = make_pole(dom, cvec(n, cplx(0.0)), 2.0 * (n + m));
                            double worst = 0.0;
                            for (double a : avals) {
                                auto curve = minimal_integral_curve(s, *p, f, m, {0.0, a});
                                worst = std::max(worst, std::abs(curve.I[0] - std::exp(a) *
                                                                                   curve.I[1]) /
                                                            curve.I[0]);
                            }
                            add_eq(c.rep,
                                   "homogeneous_n" + std::to_string(n) + "_m" + std::to_string(m),
                                   worst, 0.0, 1e-10,
                                   "for f homogeneous of degree m with psi = 2(n+m) log|z|, the "
                                   "minimal integral satisfies I(0) = e^a I(a) exactly");
                        });
            }
        }
    }
    if (battery > 0) {
        guarded(c.rep, "random_battery_upper_bound", [&] {
            auto dom = make_polydisc({1.0});
            auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(1, 8));
            double worst = -std::numeric_limits<double>::infinity();
            for (int i = 0; i < battery; ++i) {
                int m = i % 4;
                double a = avals[i % avals.size()];
                auto f = c.rand_poly(9, s.size());
                auto p = make_pole(dom, {cplx(0.0)}, 2.0 * (1 + m));
                auto curve = minimal_integral_curve(s, *p, f, m, {0.0, a});
                worst = std::max(worst, curve.I[0] - std::exp(a) * curve.I[1]);
            }
            add_le(c.rep, "random_battery_upper_bound", worst, 1e-10,
                   "minimal integral bound I(0) <= e^a I(a) for random polynomials on the disc");
        });
    }
}

void suite_concavity(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "battery", "closed_form", "linearity"});
    int battery = c.num("battery", 50);
    bool closed = c.cfg.contains("closed_form") ? c.cfg.at("closed_form").get<bool>() : true;
    bool linearity = c.cfg.contains("linearity") ? c.cfg.at("linearity").get<bool>() : true;
    auto dom = make_polydisc({1.0});
    auto grid = default_curve_grid(c.grid);

    if (battery > 0) {
        guarded(c.rep, "random_battery_concavity", [&] {
            auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(1, 8));
            double worst = 0.0, worstGap = 0.0;
            for (int i = 0; i < battery; ++i) {
                int m = i % 4;
                auto f = c.rand_poly(9, s.size());
                auto p = make_pole(dom, {cplx(0.0)}, 2.0 * (1 + m));
                auto curve = minimal_integral_curve(s, *p, f, m, grid);
                auto rc = concavity_report(curve);
                worst = std::max(worst, rc.maxViolation);
                for (double g : rc.optimalConstantGap) worstGap = std::min(worstGap, g);
            }
            add_le(c.rep, "random_battery_concavity", worst, 0.0,
                   "chord slopes of r -> I(-log r) are nonincreasing up to propagated "
                   "quadrature error (concavity)");
            add_ge(c.rep, "random_battery_monotone_gap", worstGap, -1e-10,
                   "I(t) e^t >= I(0) along the curve (e^a-optimality seen pointwise)");
        });
    }
    if (closed) {
        guarded(c.rep, "closed_form_curve", [&] {
            auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(1, 4));
            std::vector<cplx> f(s.size(), cplx(0.0));
            f[0] = 1.0;
            f[1] = 1.0;
            auto p = make_pole(dom, {cplx(0.0)}, 4.0);
            auto curve = minimal_integral_curve(s, *p, f, 1, grid);
            Curve cv{"concavity_closed_form", {"r", "I", "reference"}, {}};
            double worst = 0.0;
            for (std::size_t i = 0; i < curve.t.size(); ++i) {
                double r = std::exp(-curve.t[i]);
                double ref = M_PI * std::sqrt(r) + 0.5 * M_PI * r;
                worst = std::max(worst, std::abs(curve.I[i] - ref));
                cv.rows.push_back({r, curve.I[i], ref});
            }
            c.rep.curves.push_back(cv);
            add_eq(c.rep, "closed_form_curve", worst, 0.0, 1e-8,
                   "for f = 1 + z with a first-order jet, I(-log r) = pi sqrt(r) + (pi/2) r");
        });
    }
    if (linearity) {
        guarded(c.rep, "linearity_implies_restriction", [&] {
            double worst = 0.0;
            bool allApplicable = true;
            for (int n : {1, 2}) {
                for (int m = 0; m <= 3; ++m) {
                    auto d2 = (n == 1) ? make_polydisc({1.0}) : make_unit_ball(2);
                    auto s = build_space(d2, WeightSpec::zero(), BasisSpec::monomial(n, m + 2));
                    std::vector<cplx> f(s.size(), cplx(0.0));
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        int deg = 0;
                        for (int e : s.basis.indices[i]) deg += e;
                        if (deg == m) f[i] = cplx(1.0, 0.5);
                    }
                    auto p = make_pole(d2, cvec(n, cplx(0.0)), 2.0 * (n + m));
                    auto curve = minimal_integral_curve(s, *p, f, m, grid);
                    auto lc = linearity_restriction_check(curve);
                    allApplicable = allApplicable && lc.applicable;
                    worst = std::max(worst, lc.maxCoefficientDeviation);
                }
            }
            add_eq(c.rep, "linearity_implies_restriction", allApplicable ? worst : 1.0, 0.0,
                   1e-8,
                   "when r -> I(-log r) is linear, all sublevel minimizers agree with the "
                   "global one coefficientwise");
        });
    }
}

void suite_product(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "instances"});
    int instances = c.num("instances", 100);
    auto dl = make_polydisc({1.0});
    auto left = build_space(dl, WeightSpec::zero(), BasisSpec::monomial(1, 6));
    auto right = build_space(make_polydisc({1.0}), WeightSpec::zero(), BasisSpec::monomial(1, 6));
    const cplx s1(0.2, 0.1), s2(-0.3, 0.05);

    guarded(c.rep, "tensor_lower_bound", [&] {
        double minMargin = std::numeric_limits<double>::infinity();
        double worstEq = 0.0;
        int eqCount = 0;
        for (int i = 0; i < instances; ++i) {
            int m1 = static_cast<int>(c.rng() % 3), m2 = static_cast<int>(c.rng() % 3);
            bool force = (i % 2 == 0);
            std::vector<cplx> f1 = force ? shifted_vanishing_poly(c, s1, m1, 3, left.size())
                                         : c.rand_poly(5, left.size());
            std::vector<cplx> f2 = force ? shifted_vanishing_poly(c, s2, m2, 3, right.size())
                                         : c.rand_poly(5, right.size());
            auto pr = product_min_extension_check(left, right, f1, f2, {s1}, {s2}, m1, m2);
            minMargin = std::min(minMargin, pr.margin);
            if (pr.equalityExpected) {
                ++eqCount;
                worstEq = std::max(worstEq,
                                   std::max(std::abs(pr.margin), pr.tensorMismatch));
            }
        }
        add_ge(c.rep, "tensor_lower_bound", minMargin, -1e-10,
               "minimal extension over a product domain: ||F|| >= ||F1|| ||F2||");
        add_eq(c.rep, "equality_when_factors_vanish", eqCount > 0 ? worstEq : 1.0, 0.0, 1e-10,
               "when each factor vanishes to order m_i - 1 the minimal extension is the "
               "tensor product F1 x F2 and the norms multiply");
    });
    guarded(c.rep, "layer_decomposition_residual", [&] {
        double worst = 0.0;
        cvec sa = {s1}, sb = {cplx(-0.4, 0.0)};
        for (int i = 0; i < 10; ++i) {
            auto f = c.rand_poly(7, left.size());
            auto d = layer_decompose(left, {sa, sb}, 2, f);
            worst = std::max(worst, std::max(d.orthogonalityResidual, d.reconstructionResidual));
        }
        add_le(c.rep, "layer_decomposition_residual", worst, 1e-8,
               "nested jet-vanishing subspaces decompose the space into mutually orthogonal "
               "layers that sum back to the identity");
    });
}

void suite_suita(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "parts", "radii"});
    if (c.has_part("disc")) {
        guarded(c.rep, "disc_equality", [&] {
            auto dom = make_polydisc({1.0});
            double worst = 0.0;
            for (double r : c.num_list("radii", {0.0, 0.3, 0.6, 0.9})) {
                auto rep = suita_report(*dom, cplx(r, 0.0), 0, 0.0, c.rep.truncation);
                worst = std::max(worst, std::abs(rep.gap));
            }
            add_eq(c.rep, "disc_equality", worst, 0.0, 1e-8,
                   "on the disc pi B(z0) equals the squared logarithmic capacity");
        });
    }
    if (c.has_part("annulus")) {
        struct Case {
            double R;
            int m;
            std::vector<double> loci;
        };
        for (const Case& cs : {Case{4.0, 1, {2.0}}, Case{8.0, 2, {2.0, 4.0}}, Case{2.0, 0, {}}}) {
            std::string name = "annulus_locus_R" + std::to_string(static_cast<int>(cs.R)) + "_m" +
                               std::to_string(cs.m);
            guarded(c.rep, name, [&] {
                auto scan = equality_locus_scan(cs.R, cs.m, 0.0, std::max(64, 2 * c.grid),
                                                c.rep.truncation);
                if (cs.loci.empty()) {
                    add_ge(c.rep, name + "_positive_gap",
                           scan.detected.empty() ? scan.minGap : -1.0, 1e-13,
                           "for m = 0 on the annulus the jet inequality is strict everywhere");
                } else {
                    double dev = 0.0;
                    if (scan.detected.size() == cs.loci.size() && scan.flagged.empty()) {
                        for (std::size_t i = 0; i < cs.loci.size(); ++i)
                            dev = std::max(dev, std::abs(scan.detected[i] - cs.loci[i]));
                    } else {
                        dev = 1.0;
                    }
                    add_eq(c.rep, name, dev, 0.0, 1e-4,
                           "annulus equality radii sit at R^{k/(m+1)}, k = 1..m");
                }
            });
        }
        guarded(c.rep, "annulus_gap_curve", [&] {
            Curve cv{"annulus_gap_R4_m1", {"r", "gap", "rhs"}, {}};
            auto dom = make_annulus(4.0);
            const double logR = std::log(4.0);
            for (int i = 0; i < 48; ++i) {
                double r = std::exp(logR * (i + 0.5) / 48);
                auto rep = suita_report(*dom, cplx(r, 0.0), 1, 0.0, c.rep.truncation);
                cv.rows.push_back({r, rep.gap, rep.rhs});
            }
            c.rep.curves.push_back(cv);
        });
    }
    if (c.has_part("deterioration")) {
        guarded(c.rep, "kernel_deterioration", [&] {
            const cplx z0(0.5, 0.0);
            std::vector<double> tg;
            for (int i = 0; i <= 8; ++i) tg.push_back(0.5 * i);
            auto vals = kernel_deterioration(z0, tg, 160);
            double maxIncrease = -std::numeric_limits<double>::infinity(), maxDev = 0.0;
            const double ref = 1.0 / (M_PI * std::pow(1.0 - std::norm(z0), 2.0));
            Curve cv{"kernel_deterioration", {"t", "B_t_e_minus_t"}, {}};
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (i + 1 < vals.size()) maxIncrease = std::max(maxIncrease, vals[i + 1] - vals[i]);
                maxDev = std::max(maxDev, std::abs(vals[i] - ref));
                cv.rows.push_back({tg[i], vals[i]});
            }
            c.rep.curves.push_back(cv);
            add_le(c.rep, "deterioration_monotone", maxIncrease, 1e-8,
                   "B_t(z0) e^{-t} over Green sublevel discs is nonincreasing in t");
            add_eq(c.rep, "deterioration_constant_on_disc", maxDev, 0.0, 1e-8,
                   "on the disc the deterioration is flat: B_t(z0) e^{-t} = c(z0)^2/pi for "
                   "all t");
        });
    }
}

void suite_azukawa(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "parts"});
    if (c.has_part("ball")) {
        guarded(c.rep, "ball_equality", [&] {
            double worst = 0.0;
            for (int n = 1; n <= 3; ++n) {
                auto dom = make_unit_ball(n);
                auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(n, 4));
                double B = kernel_at(s, cvec(n, cplx(0.0)), cvec(n, cplx(0.0))).diagonal;
                auto ind = indicatrix_volume(*dom, cvec(n, cplx(0.0)), n == 1 ? 64 : 2048);
                worst = std::max(worst, std::abs(B * ind.volume - 1.0));
            }
            add_eq(c.rep, "ball_equality", worst, 0.0, 1e-6,
                   "at the centre of the ball B(0) Vol(indicatrix) = 1 (kernel-indicatrix "
                   "equality for balanced domains)");
        });
    }
    if (c.has_part("disc")) {
        guarded(c.rep, "disc_offcentre_equality", [&] {
            auto dom = make_polydisc({1.0});
            auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(1, 160));
            double B = kernel_at(s, {cplx(0.5, 0.0)}, {cplx(0.5, 0.0)}).diagonal;
            auto ind = indicatrix_volume(*dom, {cplx(0.5, 0.0)}, 64);
            add_eq(c.rep, "disc_offcentre_equality", B * ind.volume, 1.0, 1e-6,
                   "on the disc B(z0) Vol(indicatrix(z0)) = 1 at every point");
        });
    }
    if (c.has_part("balanced")) {
        guarded(c.rep, "balanced_equality", [&] {
            auto dom = make_balanced(2, [](const cvec& z) {
                return std::max(std::abs(z[0]), std::abs(z[1]));
            });
            auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(2, 4));
            double B = kernel_at(s, cvec(2, cplx(0.0)), cvec(2, cplx(0.0))).diagonal;
            auto ind = indicatrix_volume(*dom, cvec(2, cplx(0.0)), 4096);
            auto vd = volume(*dom, VolumeMethod::MonteCarlo, c.rep.seed);
            add_eq(c.rep, "balanced_indicatrix_is_domain", ind.volume, vd.value,
                   4.0 * (ind.errorEstimate + vd.errorBound),
                   "for a balanced domain the indicatrix at 0 is the domain itself; two "
                   "independent volume estimates agree within sampling error");
            add_eq(c.rep, "balanced_equality", B * ind.volume, 1.0, 0.03,
                   "B(0) = 1/Vol for balanced domains, here via the max gauge on C^2");
        });
    }
    if (c.has_part("tube")) {
        for (double r : {0.0, 0.5}) {
            std::string name = "tube_mass_z" + std::to_string(r).substr(0, 3);
            guarded(c.rep, name, [&] {
                auto dom = make_polydisc({1.0});
                auto p = make_pole(dom, {cplx(r, 0.0)}, 2.0);
                double L = tube_mass_limit(*p, [](const cvec&) { return 1.0; });
                double ref = M_PI * std::pow(1.0 - r * r, 2.0);
                add_eq(c.rep, name, std::abs(L - ref) / ref, 0.0, 1e-4,
                       "lim e^a Vol({psi < -a}) = pi / c(z0)^2 on the disc");
            });
        }
    }
}

void suite_blocki(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "battery", "a_values"});
    int battery = c.num("battery", 25);
    auto avals = c.num_list("a_values", {0.5, 1.0, 2.0});

    guarded(c.rep, "pointwise_bound_n1", [&] {
        const cplx z0(0.3, 0.2);
        auto dom = make_polydisc({1.0});
        auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(1, 160));
        double B = kernel_at(s, {z0}, {z0}).diagonal;
        auto basis8 = BasisSpec::monomial(1, 8);
        double worst = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < battery; ++i) {
            auto f = c.rand_poly(9, basis8.indices.size());
            double fz = std::norm(eval_poly(basis8.indices, f, {z0}));
            for (double a : avals) {
                const double tau = std::exp(-0.5 * a);
                const double den = 1.0 - tau * tau * std::norm(z0);
                const cplx ctr = z0 * (1.0 - tau * tau) / den;
                const double rho = tau * (1.0 - std::norm(z0)) / den;
                auto sub = make_polydisc_at({rho}, {ctr});
                auto q = quadrature_for(*sub, WeightSpec::zero(), 10);
                double mass = q.integrate([&](const cvec& z) {
                    return std::norm(eval_poly(basis8.indices, f, z));
                });
                worst = std::max(worst, fz / B - std::exp(2.0 * a) * mass);
            }
        }
        add_le(c.rep, "pointwise_bound_n1", worst, 1e-10,
               "|f(z0)|^2 / B(z0) <= e^{2na} Integral_{G < -a} |f|^2 on the disc");
    });

    guarded(c.rep, "pointwise_bound_n2", [&] {
        const cvec z0 = {cplx(0.3, 0.0), cplx(-0.2, 0.0)};
        auto dom = make_polydisc({1.0, 1.0});
        auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(2, 60));
        double B = kernel_at(s, z0, z0).diagonal;
        auto basis4 = BasisSpec::monomial(2, 4);
        double worst = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < battery; ++i) {
            std::vector<cplx> f(basis4.indices.size());
            for (auto& v : f) v = c.rand_coeff();
            double fz = std::norm(eval_poly(basis4.indices, f, z0));
            for (double a : avals) {
                const double tau = std::exp(-0.25 * a);  // psi = 4 G < -a
                std::vector<double> rho(2);
                cvec ctr(2);
                for (int j = 0; j < 2; ++j) {
                    double den = 1.0 - tau * tau * std::norm(z0[j]);
                    ctr[j] = z0[j] * (1.0 - tau * tau) / den;
                    rho[j] = tau * (1.0 - std::norm(z0[j])) / den;
                }
                auto sub = make_polydisc_at(rho, ctr);
                auto q = quadrature_for(*sub, WeightSpec::zero(), 8);
                double mass = q.integrate([&](const cvec& z) {
                    return std::norm(eval_poly(basis4.indices, f, z));
                });
                worst = std::max(worst, fz / B - std::exp(4.0 * a) * mass);
            }
        }
        add_le(c.rep, "pointwise_bound_n2", worst, 1e-10,
               "|f(z0)|^2 / B(z0) <= e^{2na} Integral_{G < -a} |f|^2 on the bidisc");
    });

    guarded(c.rep, "kernel_volume_lower_bound", [&] {
        auto dom = make_polydisc({1.0});
        auto s = build_space(dom, WeightSpec::zero(), BasisSpec::monomial(1, 160));
        double worst = std::numeric_limits<double>::infinity();
        for (double w : {0.0, 0.25, 0.5}) {
            double B = kernel_at(s, {cplx(w, 0.0)}, {cplx(w, 0.0)}).diagonal;
            auto p = make_pole(dom, {cplx(w, 0.0)}, 2.0);
            for (double a : {0.5, 1.0, 2.0, 4.0})
                worst = std::min(worst,
                                 B * std::exp(2.0 * a) * sublevel_volume(*p, 2.0 * a));
        }
        // bidisc: the Green sublevel factorizes into Moebius discs
        auto s2 = build_space(make_polydisc({1.0, 1.0}), WeightSpec::zero(),
                              BasisSpec::monomial(2, 60));
        const cvec w2 = {cplx(0.3, 0.0), cplx(-0.2, 0.0)};
        double B2 = kernel_at(s2, w2, w2).diagonal;
        for (double a : {0.5, 1.0, 2.0}) {
            double vol = 1.0;
            for (int j = 0; j < 2; ++j) {
                auto pj = make_pole(dom, {w2[j]}, 2.0);
                vol *= sublevel_volume(*pj, 2.0 * a);
            }
            worst = std::min(worst, B2 * std::exp(4.0 * a) * vol);
        }
        add_ge(c.rep, "kernel_volume_lower_bound", worst, 1.0 - 1e-8,
               "B(w) e^{2na} Vol({G < -a}) >= 1 on disc and bidisc grids of (w, a)");
    });
}

void suite_auxconstants(SuiteCtx& c) {
    validate_keys(c.cfg, {"seed", "truncation", "grid", "parts", "a_values"});
    if (c.has_part("ode")) {
        struct FCase {
            const char* name;
            CFamily fam;
            double a;
        };
        for (const FCase& fc : {FCase{"one", CFamily::one(), 1.0},
                                FCase{"exp", CFamily::exp_t(), 1.0},
                                FCase{"piecewise", CFamily::piecewise(), 2.0}}) {
            std::string name = std::string("ode_identities_") + fc.name;
            guarded(c.rep, name, [&] {
                auto tri = build_aux_triple(fc.fam, fc.a);
                auto r = verify_ode_identities(tri, 48);
                add_le(c.rep, name, std::max({r.first, r.second, r.closure}), 1e-8,
                       "the triple (u, s, g) built from c solves s u' - s' = 1, "
                       "s u'' - s'' = s'^2/g and e^{a-u} = c (s + g)");
            });
        }
    }
    if (c.has_part("constant")) {
        guarded(c.rep, "piecewise_constant", [&] {
            double worst = 0.0;
            for (double a : c.num_list("a_values", {0.0, 1.0, 2.0, 5.0})) {
                double C = constant_C(Chi::linear(), CFamily::piecewise(), a);
                worst = std::max(worst, std::abs(C - (std::exp(a) + 1.0)) / (std::exp(a) + 1.0));
            }
            add_eq(c.rep, "piecewise_constant", worst, 0.0, 1e-10,
                   "with the linear cutoff and the piecewise density, "
                   "C = sup(e^a + 1 - 2t) = e^a + 1");
        });
    }
    if (c.has_part("kappa")) {
        guarded(c.rep, "kappa_bound", [&] {
            double worstMargin = std::numeric_limits<double>::infinity();
            for (double a : {1.0, 2.0, 4.0}) {
                auto kr = kappa_constant(a);
                worstMargin = std::min(worstMargin, kr.boundTarget - kr.boundValue);
            }
            add_ge(c.rep, "kappa_bound", worstMargin, 1e-12,
                   "the exponential-cutoff constant stays strictly below "
                   "e^a + (25/16) e^{-a}");
        });
    }
    if (c.has_part("demext")) {
        guarded(c.rep, "demext_integer_case", [&] {
            add_eq(c.rep, "demext_integer_case", demext_constant(0, 1, 1.0), 2.0, 1e-12,
                   "with m = 0, p = 1, eps = 1 both Beta integrands are constant and the "
                   "ratio is exactly 2");
        });
        guarded(c.rep, "demext_beta_oracle", [&] {
            double worst = 0.0;
            for (int i = 0; i < 10; ++i) {
                int m = static_cast<int>(c.rng() % 4);
                int p = 1 + static_cast<int>(c.rng() % 3);
                std::uniform_real_distribution<double> u(0.3, m + p - 0.2);
                double eps = u(c.rng);
                double v = demext_constant(m, p, eps);
                double ref = 1.0 / boost::math::ibeta(static_cast<double>(m + p), eps, 0.5);
                worst = std::max(worst, std::abs(v - ref) / ref);
            }
            add_eq(c.rep, "demext_beta_oracle", worst, 0.0, 1e-8,
                   "the quadrature ratio matches the regularized incomplete Beta oracle");
        });
    }
    if (c.has_part("bounds")) {
        guarded(c.rep, "optimality_floor", [&] {
            double worst = std::numeric_limits<double>::infinity();
            for (double a : {0.5, 1.0, 2.0})
                worst = std::min(worst, constant_C(Chi::linear(), CFamily::exp_t(), a) -
                                            std::exp(a));
            worst = std::min(worst, constant_C(Chi::linear(), CFamily::piecewise(), 2.0) -
                                        std::exp(2.0));
            worst = std::min(
                worst, constant_C(Chi::kappa_profile(kappa_constant(1.0).kappa),
                                  CFamily::exp_t(), 1.0) -
                           std::exp(1.0));
            add_ge(c.rep, "optimality_floor", worst, -1e-9,
                   "no admissible cutoff/density pair beats the sharp constant e^a");
        });
    }
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const json& config) {
    SuiteCtx c;
    c.cfg = config;
    c.rep.suite = suite;
    c.rep.configEcho = config;
    if (config.contains("seed")) c.rep.seed = config.at("seed").get<std::uint64_t>();
    if (config.contains("truncation")) c.rep.truncation = config.at("truncation").get<int>();
    if (config.contains("grid")) c.grid = config.at("grid").get<int>();
    if (c.rep.truncation < 1 || c.grid < 2)
        throw Error("ConfigError", "truncation and grid must be positive");
    c.rng.seed(c.rep.seed);

    if (suite == "sharpness")
        suite_sharpness(c);
    else if (suite == "concavity")
        suite_concavity(c);
    else if (suite == "product")
        suite_product(c);
    else if (suite == "suita")
        suite_suita(c);
    else if (suite == "azukawa")
        suite_azukawa(c);
    else if (suite == "blocki")
        suite_blocki(c);
    else if (suite == "auxconstants")
        suite_auxconstants(c);
    else
        throw Error("ConfigError", "unknown suite '" + suite + "'");

    c.rep.pass = true;
    for (const auto& ch : c.rep.checks) c.rep.pass = c.rep.pass && ch.pass;
    return c.rep;
}

json report_json(const SuiteReport& rep, bool withTimestamp) {
    json j;
    j["suite"] = rep.suite;
    j["config"] = rep.configEcho;
    j["checks"] = json::array();
    for (const auto& ch : rep.checks) {
        json cj;
        cj["name"] = ch.name;
        cj["computed"] = ch.computed;
        cj["reference"] = ch.reference;
        cj["tol"] = ch.tol;
        cj["pass"] = ch.pass;
        cj["provenance"] = ch.provenance;
        j["checks"].push_back(cj);
    }
    j["pass"] = rep.pass;
    j["meta"]["seed"] = rep.seed;
    j["meta"]["truncation"] = rep.truncation;
    j["meta"]["version"] = kVersion;
    if (withTimestamp) {
        char buf[64];
        std::time_t now = std::time(nullptr);
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["meta"]["timestamp"] = buf;
    }
    return j;
}

void write_outputs(const SuiteReport& rep, const std::string& outDir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(fs::path(outDir) / "curves", ec);
    if (ec) throw Error("IOError", "cannot create output directory " + outDir);

    std::ofstream rf(fs::path(outDir) / "report.json", std::ios::binary);
    if (!rf) throw Error("IOError", "cannot write report.json");
    rf << report_json(rep, true).dump(2) << "\n";

    for (const auto& cv : rep.curves) {
        std::ofstream cf(fs::path(outDir) / "curves" / (cv.name + ".csv"), std::ios::binary);
        if (!cf) throw Error("IOError", "cannot write curve " + cv.name);
        for (std::size_t i = 0; i < cv.header.size(); ++i)
            cf << cv.header[i] << (i + 1 < cv.header.size() ? "," : "\n");
        char buf[64];
        for (const auto& row : cv.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
                cf << buf << (i + 1 < row.size() ? "," : "\n");
            }
        }
    }
}

}  // namespace l2lab
