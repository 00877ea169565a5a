#include "l2lab/minext.hpp"

#include <cmath>

namespace l2lab {

namespace {

double falling(int k, int b) {
    double v = 1.0;
    for (int j = 0; j < b; ++j) v *= (k - j);
    return v;
}

// raw (unnormalized) monomial derivative ∂^β (z-center)^α at z
cplx raw_deriv(const std::vector<int>& alpha, const std::vector<int>& beta, const cvec& z,
               const cvec& center) {
    double coeff = 1.0;
    for (std::size_t c = 0; c < beta.size(); ++c) coeff *= falling(alpha[c], beta[c]);
    if (coeff == 0.0) return 0.0;
    cplx v = coeff;
    for (std::size_t c = 0; c < z.size(); ++c) {
        int e = alpha[c] - beta[c];
        if (e == 0) continue;
        cplx zc = z[c] - (center.empty() ? cplx(0) : center[c]);
        if (zc == cplx(0.0)) {
            if (e > 0) return 0.0;
            throw Error("PointOutsideDomain", "negative power at 0");
        }
        v *= std::pow(zc, e);
    }
    return v;
}

}  // namespace

JetConstraint jet_of(const BergmanSpace& s, const std::vector<cplx>& coeffs, const cvec& z0,
                     int m) {
    if (coeffs.size() != s.size()) throw Error("DimensionMismatch", "jet_of: coefficient count");
    JetConstraint jc;
    jc.z0 = z0;
    jc.m = m;
    for (const auto& beta : multiindices_upto(static_cast<int>(z0.size()), m)) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (coeffs[i] == cplx(0.0)) continue;
            acc += coeffs[i] * raw_deriv(s.basis.indices[i], beta, z0, s.center);
        }
        jc.targetJet.push_back({beta, acc});
    }
    return jc;
}

MinExtResult minimal_extension(const BergmanSpace& s, const JetConstraint& jc) {
    if (!s.diagonal) throw Error("UnsupportedWeight", "minimal_extension needs a diagonal space");
    if (!contains(*s.domain, jc.z0)) throw Error("PointOutsideDomain", "constraint point");
    const std::size_t N = s.size();
    const std::size_t M = jc.targetJet.size();
    Eigen::MatrixXcd C(M, N);
    Eigen::VectorXcd b(M);
    for (std::size_t r = 0; r < M; ++r) {
        const auto& [beta, target] = jc.targetJet[r];
        for (std::size_t i = 0; i < N; ++i) C(r, i) = s.deriv_orthonormal(i, beta, jc.z0);
        b(r) = target;
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(C);
    cod.setThreshold(1e-12);
    Eigen::VectorXcd x = cod.solve(b);
    double resid = (C * x - b).norm();
    double bscale = 1.0 + b.norm();
    if (resid > 1e-8 * bscale)
        throw Error("InfeasibleConstraint", "jet target not attainable in the truncated space");

    MinExtResult out;
    out.ortho = x;
    out.normSquared = x.squaredNorm();
    out.constraintResidual = resid;
    // least-norm solutions lie in the row space; measure the residual of that
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(C.adjoint());
    qr.setThreshold(1e-12);
    const int rank = qr.rank();
    Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(N, rank);
    out.orthogonalityResidual = (x - Q * (Q.adjoint() * x)).norm();
    out.raw.resize(N);
    for (std::size_t i = 0; i < N; ++i)
        out.raw[i] = x(i) * std::exp(-0.5 * s.logNorm2[i]);
    return out;
}

BergmanSpace restrict_norms(const BergmanSpace& s, const PoleFunction& p, double t) {
    if (t < 0.0) throw Error("InvalidParameter", "restrict_norms: t >= 0 required");
    for (const auto& c : p.z0)
        if (c != cplx(0.0)) throw Error("UnsupportedSublevel", "radial poles at 0 only");
    const DomainSpec& d = *s.domain;
    const double sigma = std::exp(-t / p.multiplier);  // linear shrink factor
    const double pw = s.weight.radial_power();
    BergmanSpace out = s;
    switch (d.kind) {
        case DomainKind::Polydisc: {
            for (const auto& c : d.center)
                if (c != cplx(0.0)) throw Error("UnsupportedSublevel", "offset disc sublevels");
            for (std::size_t i = 0; i < s.size(); ++i) {
                double acc = 0.0;
                for (int c = 0; c < d.n; ++c)
                    acc += std::log(2.0 * M_PI) +
                           log_radial_moment(2.0 * s.basis.indices[i][c] + 1.0 +
                                                 (d.n == 1 ? pw : 0.0),
                                             0.0, sigma * d.radii[c]);
                out.logNorm2[i] = acc;
                out.norm2[i] = std::exp(acc);
            }
            break;
        }
        case DomainKind::UnitBall: {
            for (std::size_t i = 0; i < s.size(); ++i) {
                int tot = 0;
                for (int a : s.basis.indices[i]) tot += a;
                double acc = log_sphere_factor(d.n, s.basis.indices[i]) +
                             log_radial_moment(2.0 * tot + 2.0 * d.n - 1.0 + pw, 0.0, sigma);
                out.logNorm2[i] = acc;
                out.norm2[i] = std::exp(acc);
            }
            break;
        }
        default:
            throw Error("UnsupportedSublevel", "sublevel norms on this domain");
    }
    return out;
}

MinimalIntegralCurve minimal_integral_curve(const BergmanSpace& s, const PoleFunction& p,
                                            const std::vector<cplx>& f, int m,
                                            const std::vector<double>& grid) {
    if (grid.empty() || grid.front() != 0.0)
        throw Error("InvalidParameter", "curve grid must start at 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw Error("InvalidParameter", "curve grid must increase");
    JetConstraint jc = jet_of(s, f, p.z0, m);
    MinimalIntegralCurve c;
    for (double t : grid) {
        BergmanSpace st = restrict_norms(s, p, t);
        MinExtResult r = minimal_extension(st, jc);
        c.t.push_back(t);
        c.I.push_back(r.normSquared);
        c.quadratureError.push_back(1e-13 * r.normSquared);
        c.coefficients.push_back(std::move(r.raw));
    }
    return c;
}

std::vector<double> default_curve_grid(int points, double rmin) {
    if (points < 2 || !(rmin > 0.0) || rmin >= 1.0)
        throw Error("InvalidParameter", "bad curve grid parameters");
    std::vector<double> t;
    for (int i = 0; i < points; ++i) {
        double r = std::pow(rmin, static_cast<double>(i) / (points - 1));
        t.push_back(i == 0 ? 0.0 : -std::log(r));
    }
    return t;
}

ConcavityReport concavity_report(const MinimalIntegralCurve& c) {
    if (c.t.size() < 3) throw Error("InvalidGrid", "need at least 3 grid points");
    const std::size_t n = c.t.size();
    // r = e^{-t} decreasing along the grid; work in increasing r
    std::vector<double> r(n), I(n), eq(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = std::exp(-c.t[n - 1 - i]);
        I[i] = c.I[n - 1 - i];
        eq[i] = c.quadratureError[n - 1 - i];
    }
    ConcavityReport rep;
    double maxAbsSlope = 0.0, maxViol = 0.0;
    std::vector<double> slopes(n - 1), slopeTol(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double h = r[i + 1] - r[i];
        slopes[i] = (I[i + 1] - I[i]) / h;
        slopeTol[i] = (eq[i] + eq[i + 1] + 1e-15 * (I[i] + I[i + 1])) / h;
        maxAbsSlope = std::max(maxAbsSlope, std::abs(slopes[i]));
    }
    for (std::size_t i = 0; i + 1 < n - 1; ++i) {
        double d = slopes[i + 1] - slopes[i];  // concave means nonpositive
        rep.secondDifferences.push_back(d);
        maxViol = std::max(maxViol, d - 2.0 * (slopeTol[i] + slopeTol[i + 1]));
    }
    rep.maxViolation = maxViol;
    for (std::size_t i = 0; i < n; ++i)
        rep.optimalConstantGap.push_back(c.I[i] * std::exp(c.t[i]) - c.I.front());
    rep.linearityThreshold = std::max(1e-8 * std::max(1.0, maxAbsSlope),
                                      10.0 * *std::max_element(slopeTol.begin(), slopeTol.end()));
    rep.isNumericallyLinear = true;
    for (double d : rep.secondDifferences)
        if (std::abs(d) > rep.linearityThreshold) rep.isNumericallyLinear = false;
    return rep;
}

LinearityCheck linearity_restriction_check(const MinimalIntegralCurve& c) {
    LinearityCheck out;
    if (c.I.empty() || c.I.front() <= 0.0) return out;  // degenerate: not applicable
    ConcavityReport rep = concavity_report(c);
    if (!rep.isNumericallyLinear) return out;
    out.applicable = true;
    double dev = 0.0;
    for (const auto& coeffs : c.coefficients)
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            dev = std::max(dev, std::abs(coeffs[i] - c.coefficients.front()[i]));
    out.maxCoefficientDeviation = dev;
    out.pass = dev < 1e-8;
    return out;
}

}  // namespace l2lab
