#include "l2lab/product.hpp"

#include <cmath>

namespace l2lab {

namespace {

Eigen::VectorXcd to_ortho(const BergmanSpace& s, const std::vector<cplx>& raw) {
    if (raw.size() != s.size()) throw Error("DimensionMismatch", "coefficient count");
    Eigen::VectorXcd x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) x(i) = raw[i] * std::exp(0.5 * s.logNorm2[i]);
    return x;
}

std::vector<cplx> to_raw(const BergmanSpace& s, const Eigen::VectorXcd& x) {
    std::vector<cplx> raw(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) raw[i] = x(i) * std::exp(-0.5 * s.logNorm2[i]);
    return raw;
}

// Q with orthonormal columns spanning the representers of the jet functionals
// of order <= m at the points of S (in orthonormal coordinates).
Eigen::MatrixXcd jet_representers(const BergmanSpace& s, const std::vector<cvec>& S, int m) {
    const std::size_t N = s.size();
    if (m < 0 || S.empty()) return Eigen::MatrixXcd::Zero(N, 0);
    auto betas = multiindices_upto(s.domain->n, m);
    Eigen::MatrixXcd CH(N, S.size() * betas.size());
    std::size_t col = 0;
    for (const auto& pt : S)
        for (const auto& beta : betas) {
            for (std::size_t i = 0; i < N; ++i)
                CH(i, col) = std::conj(s.deriv_orthonormal(i, beta, pt));
            ++col;
        }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(CH);
    qr.setThreshold(1e-12);
    const int rank = qr.rank();
    return qr.householderQ() * Eigen::MatrixXcd::Identity(N, rank);
}

}  // namespace

std::vector<cplx> project_vanishing(const BergmanSpace& s, const std::vector<cvec>& S, int m,
                                    const std::vector<cplx>& f) {
    Eigen::VectorXcd x = to_ortho(s, f);
    if (m >= 0) {
        Eigen::MatrixXcd Q = jet_representers(s, S, m);
        x -= Q * (Q.adjoint() * x);
    }
    return to_raw(s, x);
}

DecompositionLayers layer_decompose(const BergmanSpace& s, const std::vector<cvec>& S, int m,
                                    const std::vector<cplx>& f) {
    if (S.empty()) throw Error("InvalidParameter", "site set must be nonempty");
    for (const auto& pt : S)
        if (!contains(*s.domain, pt)) throw Error("PointOutsideDomain", "site outside domain");
    DecompositionLayers out;
    Eigen::VectorXcd x = to_ortho(s, f);
    std::vector<Eigen::VectorXcd> proj(m + 2);
    proj[0] = x;  // J_{-1} = whole space
    for (int k = 0; k <= m; ++k) {
        Eigen::MatrixXcd Q = jet_representers(s, S, k);
        proj[k + 1] = x - Q * (Q.adjoint() * x);
    }
    std::vector<Eigen::VectorXcd> comps(m + 1);
    for (int k = 0; k <= m; ++k) {
        comps[k] = proj[k] - proj[k + 1];
        out.components.push_back(to_raw(s, comps[k]));
    }
    out.remainder = to_raw(s, proj[m + 1]);
    // diagnostics
    Eigen::VectorXcd sum = proj[m + 1];
    double orth = 0.0;
    for (int k = 0; k <= m; ++k) {
        sum += comps[k];
        for (int l = k + 1; l <= m; ++l)
            orth = std::max(orth, std::abs(comps[k].dot(comps[l])));
        orth = std::max(orth, std::abs(comps[k].dot(proj[m + 1])));
    }
    out.orthogonalityResidual = orth;
    out.reconstructionResidual = (sum - x).norm();
    return out;
}

ProductMinExtReport product_min_extension_check(const BergmanSpace& left,
                                                const BergmanSpace& right,
                                                const std::vector<cplx>& f1,
                                                const std::vector<cplx>& f2, const cvec& s1,
                                                const cvec& s2, int m1, int m2) {
    if (m1 < 0 || m2 < 0) throw Error("InvalidParameter", "jet orders must be >= 0");
    MinExtResult F1 = minimal_extension(left, jet_of(left, f1, s1, m1));
    MinExtResult F2 = minimal_extension(right, jet_of(right, f2, s2, m2));

    BergmanSpace ps = product_space(left, right);
    std::vector<cplx> f(ps.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) f[i * right.size() + j] = f1[i] * f2[j];
    cvec s12 = s1;
    s12.insert(s12.end(), s2.begin(), s2.end());
    MinExtResult F = minimal_extension(ps, jet_of(ps, f, s12, m1 + m2));

    ProductMinExtReport rep;
    rep.normF = std::sqrt(F.normSquared);
    rep.normF1 = std::sqrt(F1.normSquared);
    rep.normF2 = std::sqrt(F2.normSquared);
    rep.margin = rep.normF - rep.normF1 * rep.normF2;

    auto vanishes = [](const BergmanSpace& s, const std::vector<cplx>& g, const cvec& pt,
                       int order) {
        if (order < 0) return true;
        JetConstraint jc = jet_of(s, g, pt, order);
        double scale = 0.0, mx = 0.0;
        for (const auto& c : g) scale = std::max(scale, std::abs(c));
        for (const auto& [beta, v] : jc.targetJet) mx = std::max(mx, std::abs(v));
        return mx <= 1e-12 * (1.0 + scale);
    };
    rep.equalityExpected = vanishes(left, f1, s1, m1 - 1) && vanishes(right, f2, s2, m2 - 1);
    double mism = 0.0;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            mism = std::max(mism,
                            std::abs(F.raw[i * right.size() + j] - F1.raw[i] * F2.raw[j]));
    rep.tensorMismatch = mism;
    return rep;
}

}  // namespace l2lab
