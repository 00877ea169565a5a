#include "l2lab/domain.hpp"

#include <cmath>
#include <random>

namespace l2lab {

// ---------------------------------------------------------------- WeightSpec

double WeightSpec::phi(double r) const {
    switch (kind) {
        case Kind::Zero:
            return 0.0;
        case Kind::RadialLog:
            return alpha * 2.0 * std::log(r);  // α log|z|²
        case Kind::HarmonicLog:
            return 2.0 * alpha * std::log(r);  // 2η with η = α log|z|
        case Kind::Grid: {
            if (gridR.size() < 2 || gridR.size() != gridPhi.size())
                throw Error("InvalidParameter", "Grid weight needs matching samples");
            if (r <= gridR.front()) return gridPhi.front();
            if (r >= gridR.back()) return gridPhi.back();
            auto it = std::upper_bound(gridR.begin(), gridR.end(), r);
            size_t i = it - gridR.begin();
            double t = (r - gridR[i - 1]) / (gridR[i] - gridR[i - 1]);
            return gridPhi[i - 1] + t * (gridPhi[i] - gridPhi[i - 1]);
        }
    }
    return 0.0;
}

double WeightSpec::radial_power() const {
    // e^{-φ} = r^power for the log-type weights.
    if (kind == Kind::Zero) return 0.0;
    if (kind == Kind::RadialLog || kind == Kind::HarmonicLog) return -2.0 * alpha;
    throw Error("UnsupportedWeight", "weight has no pure power profile");
}

WeightSpec WeightSpec::radial_log(double a) {
    WeightSpec w;
    w.kind = Kind::RadialLog;
    w.alpha = a;
    return w;
}

WeightSpec WeightSpec::harmonic_log(double a) {
    WeightSpec w;
    w.kind = Kind::HarmonicLog;
    w.alpha = a;
    return w;
}

double QuadratureRule::integrate(const std::function<double(const cvec&)>& f) const {
    std::vector<double> terms(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
    return pairwise_sum(terms);
}

// ------------------------------------------------------------- construction

DomainPtr make_unit_ball(int n) {
    if (n < 1) throw Error("InvalidParameter", "ball dimension must be >= 1");
    auto d = std::make_shared<DomainSpec>();
    d->kind = DomainKind::UnitBall;
    d->n = n;
    return d;
}

DomainPtr make_polydisc(std::vector<double> radii) {
    return make_polydisc_at(std::move(radii), {});
}

DomainPtr make_polydisc_at(std::vector<double> radii, cvec center) {
    if (radii.empty()) throw Error("InvalidParameter", "polydisc needs at least one radius");
    for (double r : radii)
        if (!(r > 0.0)) throw Error("InvalidParameter", "polydisc radius must be positive");
    auto d = std::make_shared<DomainSpec>();
    d->kind = DomainKind::Polydisc;
    d->n = static_cast<int>(radii.size());
    d->radii = std::move(radii);
    if (center.empty()) center.assign(d->n, cplx(0.0));
    if (static_cast<int>(center.size()) != d->n)
        throw Error("DimensionMismatch", "polydisc center dimension");
    d->center = std::move(center);
    return d;
}

DomainPtr make_balanced(int n, std::function<double(const cvec&)> gauge) {
    if (n < 1) throw Error("InvalidParameter", "balanced dimension must be >= 1");
    if (!gauge) throw Error("InvalidParameter", "balanced domain needs a gauge");
    // Spot-check homogeneity h(τ z) = |τ| h(z) on random rays.
    std::mt19937_64 rng(20240817u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        cvec z(n);
        for (int i = 0; i < n; ++i) z[i] = cplx(u(rng), u(rng));
        double hz = gauge(z);
        if (!(hz > 0.0) || !std::isfinite(hz)) continue;
        double th = 0.25 + 1.5 * std::abs(u(rng));
        double ang = M_PI * u(rng);
        cplx tau = std::polar(th, ang);
        cvec tz(n);
        for (int i = 0; i < n; ++i) tz[i] = tau * z[i];
        double htz = gauge(tz);
        if (std::abs(htz - th * hz) > 1e-8 * (1.0 + th * hz))
            throw Error("NonHomogeneousGauge", "gauge fails h(tau z) = |tau| h(z)");
    }
    auto d = std::make_shared<DomainSpec>();
    d->kind = DomainKind::Balanced;
    d->n = n;
    d->gauge = std::move(gauge);
    return d;
}

DomainPtr make_annulus(double R) {
    if (!(R > 1.0)) throw Error("InvalidParameter", "annulus needs R > 1");
    auto d = std::make_shared<DomainSpec>();
    d->kind = DomainKind::Annulus;
    d->n = 1;
    d->R = R;
    return d;
}

DomainPtr make_product(DomainPtr left, DomainPtr right) {
    if (!left || !right) throw Error("InvalidParameter", "product needs two factors");
    auto d = std::make_shared<DomainSpec>();
    d->kind = DomainKind::Product;
    d->n = left->n + right->n;
    d->left = std::move(left);
    d->right = std::move(right);
    return d;
}

DomainPtr make_sublevel(DomainPtr base, std::shared_ptr<const PoleFunction> pole, double a) {
    if (!base || !pole) throw Error("InvalidParameter", "sublevel needs base and pole");
    if (a < 0.0) throw Error("InvalidParameter", "sublevel level must be >= 0");
    auto d = std::make_shared<DomainSpec>();
    d->kind = DomainKind::Sublevel;
    d->n = base->n;
    d->base = std::move(base);
    d->pole = std::move(pole);
    d->level = a;
    return d;
}

// ----------------------------------------------------------------- geometry

bool contains(const DomainSpec& d, const cvec& z) {
    if (static_cast<int>(z.size()) != d.n) throw Error("DimensionMismatch", "contains: len(z) != n");
    switch (d.kind) {
        case DomainKind::UnitBall: {
            double s = 0.0;
            for (const auto& zi : z) s += std::norm(zi);
            return s < 1.0;
        }
        case DomainKind::Polydisc: {
            for (int i = 0; i < d.n; ++i)
                if (std::abs(z[i] - d.center[i]) >= d.radii[i]) return false;
            return true;
        }
        case DomainKind::Balanced:
            return d.gauge(z) < 1.0;
        case DomainKind::Annulus: {
            double r = std::abs(z[0]);
            return r > 1.0 && r < d.R;
        }
        case DomainKind::Product: {
            cvec zl(z.begin(), z.begin() + d.left->n);
            cvec zr(z.begin() + d.left->n, z.end());
            return contains(*d.left, zl) && contains(*d.right, zr);
        }
        case DomainKind::Sublevel: {
            if (!contains(*d.base, z)) return false;
            if (!d.pole->eval) throw Error("InvalidParameter", "sublevel pole has no evaluator");
            return d.pole->eval(z) < -d.level;
        }
    }
    return false;
}

double bounding_radius(const DomainSpec& d) {
    switch (d.kind) {
        case DomainKind::UnitBall:
            return 1.0;
        case DomainKind::Polydisc: {
            double m = 0.0;
            for (int i = 0; i < d.n; ++i) m = std::max(m, std::abs(d.center[i]) + d.radii[i]);
            return m;
        }
        case DomainKind::Balanced: {
            // rb = 1 / min_{|ξ|=1} h(ξ), estimated on a deterministic sample.
            std::mt19937_64 rng(99u);
            std::normal_distribution<double> g(0.0, 1.0);
            double hmin = std::numeric_limits<double>::infinity();
            for (int s = 0; s < 4096; ++s) {
                cvec xi(d.n);
                double nrm = 0.0;
                for (int i = 0; i < d.n; ++i) {
                    xi[i] = cplx(g(rng), g(rng));
                    nrm += std::norm(xi[i]);
                }
                nrm = std::sqrt(nrm);
                for (auto& c : xi) c /= nrm;
                hmin = std::min(hmin, d.gauge(xi));
            }
            if (!(hmin > 0.0)) throw Error("InvalidParameter", "unbounded balanced domain");
            return 1.0 / hmin * 1.0000001;
        }
        case DomainKind::Annulus:
            return d.R;
        case DomainKind::Product:
            return std::max(bounding_radius(*d.left), bounding_radius(*d.right));
        case DomainKind::Sublevel:
            return bounding_radius(*d.base);
    }
    return 0.0;
}

// ------------------------------------------------------------------- volume

namespace {

double ball_volume(int n) {
    // Vol(B^n in C^n) = π^n / n!
    double v = 1.0;
    for (int i = 1; i <= n; ++i) v *= M_PI / i;
    return v;
}

std::optional<double> exact_volume(const DomainSpec& d) {
    switch (d.kind) {
        case DomainKind::UnitBall:
            return ball_volume(d.n);
        case DomainKind::Polydisc: {
            double v = 1.0;
            for (double r : d.radii) v *= M_PI * r * r;
            return v;
        }
        case DomainKind::Annulus:
            return M_PI * (d.R * d.R - 1.0);
        case DomainKind::Product: {
            auto a = exact_volume(*d.left), b = exact_volume(*d.right);
            if (a && b) return *a * *b;
            return std::nullopt;
        }
        case DomainKind::Balanced:
            return std::nullopt;
        case DomainKind::Sublevel: {
            const PoleFunction& p = *d.pole;
            bool pole_origin = true;
            for (const auto& c : p.z0) pole_origin &= (c == cplx(0.0));
            const DomainSpec& base = *d.base;
            if (pole_origin &&
                (base.kind == DomainKind::UnitBall || base.kind == DomainKind::Balanced ||
                 (base.kind == DomainKind::Polydisc &&
                  std::all_of(base.center.begin(), base.center.end(),
                              [](cplx c) { return c == cplx(0.0); })))) {
                // {mult·log h < -a} is the base scaled by e^{-a/mult}.
                auto vb = exact_volume(base);
                if (!vb) return std::nullopt;
                double scale = std::exp(-d.level / p.multiplier);
                return *vb * std::pow(scale, 2 * d.n);
            }
            if (base.kind == DomainKind::Polydisc && base.n == 1 && base.center[0] == cplx(0.0) &&
                p.z0.size() == 1) {
                // Sublevel of the disc Green function is a round (Mobius) disc.
                double r = base.radii[0];
                cplx w0 = p.z0[0] / r;
                double tau = std::exp(-d.level / p.multiplier);
                double rho = tau * (1.0 - std::norm(w0)) / (1.0 - tau * tau * std::norm(w0));
                return M_PI * (rho * r) * (rho * r);
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

VolumeResult volume(const DomainSpec& d, VolumeMethod method, std::uint64_t seed,
                    std::size_t samples) {
    if (method == VolumeMethod::Exact || method == VolumeMethod::Quadrature) {
        auto v = exact_volume(d);
        if (!v) throw Error("ExactUnavailable", "no closed-form volume for this domain");
        return {*v, 0.0, "exact"};
    }
    // Monte Carlo in the bounding polydisc box [-rb, rb]^{2n}, fixed seed,
    // pairwise-summed indicator.
    double rb = bounding_radius(d);
    double boxvol = std::pow(2.0 * rb, 2 * d.n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-rb, rb);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        cvec z(d.n);
        for (int i = 0; i < d.n; ++i) z[i] = cplx(u(rng), u(rng));
        if (contains(d, z)) ++hits;
    }
    double p = static_cast<double>(hits) / samples;
    double se = boxvol * std::sqrt(std::max(p * (1.0 - p), 1e-300) / samples);
    return {boxvol * p, se, "montecarlo"};
}

// --------------------------------------------------------------- quadrature

namespace {

// 1-D circled rule on {r0 < |z| < r1}: equispaced angles (exact for Fourier
// modes up to 2*degree) x Gauss radial nodes carrying r dr and the weight.
QuadratureRule circled_rule_1d(double r0, double r1, const WeightSpec& w, int degree, cplx center) {
    const int M = 2 * degree + 2;
    double pw = 0.0;
    bool power_weight = true;
    try {
        pw = w.radial_power();
    } catch (const Error&) {
        power_weight = false;
    }
    int n = std::max(64, degree + 4 + static_cast<int>(std::ceil(std::abs(pw) / 2.0)));
    const GaussRule& g = gauss_legendre(n);
    QuadratureRule rule;
    rule.exactness = "z^a conj(z)^b exact for a,b <= " + std::to_string(degree);
    rule.errorBound = power_weight ? 1e-14 : 1e-6;
    const double mid = 0.5 * (r0 + r1), half = 0.5 * (r1 - r0);
    for (int j = 0; j < n; ++j) {
        double r = mid + half * g.x[j];
        double wr = half * g.w[j] * r * std::exp(-w.phi(r)) * (2.0 * M_PI / M);
        for (int l = 0; l < M; ++l) {
            double th = 2.0 * M_PI * l / M;
            rule.nodes.push_back({center + std::polar(r, th)});
            rule.weights.push_back(wr);
        }
    }
    return rule;
}

QuadratureRule tensor_rule(const QuadratureRule& a, const QuadratureRule& b) {
    QuadratureRule r;
    r.exactness = a.exactness + " (x) " + b.exactness;
    r.errorBound = a.errorBound + b.errorBound;
    for (size_t i = 0; i < a.nodes.size(); ++i)
        for (size_t j = 0; j < b.nodes.size(); ++j) {
            cvec z = a.nodes[i];
            z.insert(z.end(), b.nodes[j].begin(), b.nodes[j].end());
            r.nodes.push_back(std::move(z));
            r.weights.push_back(a.weights[i] * b.weights[j]);
        }
    return r;
}

// Unit ball in C^n, n >= 2: squared radii live on the simplex {Σu_i < 1};
// the Duffy-type map u_i = x_i Π_{j<i}(1 - x_j) has polynomial Jacobian, so a
// tensor Gauss grid in x times equispaced angles is exact for monomial pairs.
QuadratureRule ball_rule(int n, const WeightSpec& w, int degree) {
    const int M = 2 * degree + 2;
    const int ng = std::max(8, (degree + n + 3) / 2 + 2);
    const GaussRule& g = gauss_legendre(ng);
    // radial weight must be a function of |z| only
    QuadratureRule rule;
    rule.exactness = "ball monomial pairs up to degree " + std::to_string(degree);
    rule.errorBound = 1e-14;

    std::vector<int> ix(n, 0), ia(n, 0);
    // iterate the tensor grid of Gauss points
    std::function<void(int)> rec_x = [&](int depth) {
        if (depth == n) {
            // map to simplex
            std::vector<double> u(n);
            double prod = 1.0, jac = 1.0, wx = 1.0;
            for (int i = 0; i < n; ++i) {
                double xi = 0.5 * (g.x[ix[i]] + 1.0);
                wx *= 0.5 * g.w[ix[i]];
                u[i] = xi * prod;
                jac *= prod;
                prod *= (1.0 - xi);
            }
            double rr = 0.0;
            for (int i = 0; i < n; ++i) rr += u[i];
            double wnode = wx * jac * std::pow(0.5, n) * std::exp(-w.phi(std::sqrt(rr)));
            // angles
            std::function<void(int, cvec&, double)> rec_a = [&](int d2, cvec& z, double wa) {
                if (d2 == n) {
                    rule.nodes.push_back(z);
                    rule.weights.push_back(wnode * wa);
                    return;
                }
                for (int l = 0; l < M; ++l) {
                    z[d2] = std::polar(std::sqrt(u[d2]), 2.0 * M_PI * l / M);
                    rec_a(d2 + 1, z, wa * 2.0 * M_PI / M);
                }
            };
            cvec z(n);
            rec_a(0, z, 1.0);
            return;
        }
        for (ix[depth] = 0; ix[depth] < ng; ++ix[depth]) rec_x(depth + 1);
    };
    rec_x(0);
    return rule;
}

QuadratureRule sampling_rule(const DomainSpec& d, const WeightSpec& w, std::uint64_t seed,
                             std::size_t samples) {
    double rb = bounding_radius(d);
    double boxvol = std::pow(2.0 * rb, 2 * d.n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-rb, rb);
    QuadratureRule rule;
    rule.exactness = "monte carlo sampling rule";
    for (std::size_t s = 0; s < samples; ++s) {
        cvec z(d.n);
        for (int i = 0; i < d.n; ++i) z[i] = cplx(u(rng), u(rng));
        if (!contains(d, z)) continue;
        double nrm = 0.0;
        for (const auto& zi : z) nrm += std::norm(zi);
        rule.nodes.push_back(std::move(z));
        rule.weights.push_back(boxvol / samples * std::exp(-w.phi(std::sqrt(nrm))));
    }
    rule.errorBound = boxvol / std::sqrt(static_cast<double>(samples));
    return rule;
}

}  // namespace

QuadratureRule quadrature_for(const DomainSpec& d, const WeightSpec& w, int degree) {
    if (degree < 0) throw Error("InvalidParameter", "quadrature degree must be >= 0");
    switch (d.kind) {
        case DomainKind::Polydisc: {
            if (d.n == 1) return circled_rule_1d(0.0, d.radii[0], w, degree, d.center[0]);
            if (w.kind != WeightSpec::Kind::Zero)
                throw Error("UnsupportedWeight", "weighted polydisc quadrature (n >= 2)");
            QuadratureRule r = circled_rule_1d(0.0, d.radii[0], w, degree, d.center[0]);
            for (int i = 1; i < d.n; ++i)
                r = tensor_rule(r, circled_rule_1d(0.0, d.radii[i], w, degree, d.center[i]));
            return r;
        }
        case DomainKind::Annulus:
            return circled_rule_1d(1.0, d.R, w, degree, 0.0);
        case DomainKind::UnitBall:
            if (d.n == 1) return circled_rule_1d(0.0, 1.0, w, degree, 0.0);
            return ball_rule(d.n, w, degree);
        case DomainKind::Product:
            return tensor_rule(quadrature_for(*d.left, w, degree),
                               quadrature_for(*d.right, w, degree));
        case DomainKind::Balanced:
        case DomainKind::Sublevel:
            return sampling_rule(d, w, 20240817u, 400000);
    }
    throw Error("InvalidParameter", "unknown domain kind");
}

}  // namespace l2lab
