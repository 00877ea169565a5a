#include "l2lab/bergman.hpp"

#include <cmath>

namespace l2lab {

std::vector<std::vector<int>> multiindices_upto(int n, int m) {
    std::vector<std::vector<int>> out;
    for (int deg = 0; deg <= m; ++deg) {
        std::vector<int> idx(n, 0);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == n - 1) {
                idx[pos] = rem;
                out.push_back(idx);
                return;
            }
            for (int k = rem; k >= 0; --k) {
                idx[pos] = k;
                rec(pos + 1, rem - k);
            }
        };
        if (n == 0) continue;
        rec(0, deg);
    }
    return out;
}

BasisSpec BasisSpec::monomial(int n, int maxDegree) {
    if (maxDegree < 0) throw Error("InvalidParameter", "maxDegree must be >= 0");
    BasisSpec b;
    b.kind = Kind::Monomial;
    b.maxDegree = maxDegree;
    b.indices = multiindices_upto(n, maxDegree);
    return b;
}

BasisSpec BasisSpec::laurent(int kmin, int kmax) {
    if (kmin > 0 || kmax < 0) throw Error("InvalidParameter", "laurent range must bracket 0");
    BasisSpec b;
    b.kind = Kind::Laurent;
    b.kmin = kmin;
    b.kmax = kmax;
    for (int k = kmin; k <= kmax; ++k) b.indices.push_back({k});
    return b;
}

BasisSpec BasisSpec::product(const BasisSpec& left, const BasisSpec& right) {
    BasisSpec b;
    b.kind = Kind::ProductBasis;
    for (const auto& li : left.indices)
        for (const auto& ri : right.indices) {
            std::vector<int> idx = li;
            idx.insert(idx.end(), ri.begin(), ri.end());
            b.indices.push_back(std::move(idx));
        }
    return b;
}

namespace {

double falling(int k, int b) {
    double v = 1.0;
    for (int j = 0; j < b; ++j) v *= (k - j);
    return v;
}

}  // namespace

double log_sphere_factor(int n, const std::vector<int>& alpha) {
    int tot = 0;
    double s = std::log(2.0) + n * std::log(M_PI);
    for (int a : alpha) {
        s += std::lgamma(a + 1.0);
        tot += a;
    }
    s -= std::lgamma(n + tot + 0.0);
    return s;
}

cplx BergmanSpace::eval_orthonormal(std::size_t i, const cvec& z) const {
    if (!diagonal) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < size(); ++j) {
            cplx b = 1.0;
            for (std::size_t c = 0; c < z.size(); ++c)
                b *= std::pow(z[c] - (center.empty() ? cplx(0) : center[c]),
                              basis.indices[j][c]);
            acc += orthomap(j, i) * b;
        }
        return acc;
    }
    const auto& alpha = basis.indices[i];
    cplx logz = -0.5 * logNorm2[i];
    for (std::size_t c = 0; c < z.size(); ++c) {
        cplx zc = z[c] - (center.empty() ? cplx(0) : center[c]);
        if (alpha[c] == 0) continue;
        if (zc == cplx(0.0)) {
            if (alpha[c] > 0) return 0.0;
            throw Error("PointOutsideDomain", "negative power at 0");
        }
        logz += static_cast<double>(alpha[c]) * std::log(zc);
    }
    return std::exp(logz);
}

cplx BergmanSpace::deriv_orthonormal(std::size_t i, const std::vector<int>& beta,
                                     const cvec& z) const {
    if (!diagonal) throw Error("UnsupportedWeight", "jets on non-diagonal spaces");
    const auto& alpha = basis.indices[i];
    double coeff = 1.0;
    for (std::size_t c = 0; c < beta.size(); ++c) coeff *= falling(alpha[c], beta[c]);
    if (coeff == 0.0) return 0.0;
    cplx logz = -0.5 * logNorm2[i];
    for (std::size_t c = 0; c < z.size(); ++c) {
        int e = alpha[c] - beta[c];
        if (e == 0) continue;
        cplx zc = z[c] - (center.empty() ? cplx(0) : center[c]);
        if (zc == cplx(0.0)) {
            if (e > 0) return 0.0;
            throw Error("PointOutsideDomain", "negative power at 0");
        }
        logz += static_cast<double>(e) * std::log(zc);
    }
    return coeff * std::exp(logz);
}

namespace {

// diagonal log-norm table for the supported circled cases; throws otherwise
std::vector<double> diagonal_log_norms(const DomainSpec& d, const WeightSpec& w,
                                       const BasisSpec& b) {
    std::vector<double> out;
    out.reserve(b.indices.size());
    const double pw = w.radial_power();  // throws for non-power weights
    switch (d.kind) {
        case DomainKind::Polydisc: {
            bool offset = false;
            for (const auto& c : d.center) offset |= (c != cplx(0.0));
            if (offset && w.kind != WeightSpec::Kind::Zero)
                throw Error("UnsupportedWeight", "weighted offset disc");
            if (d.n > 1 && w.kind != WeightSpec::Kind::Zero)
                throw Error("UnsupportedWeight", "weighted polydisc norms (n >= 2)");
            for (const auto& alpha : b.indices) {
                double s = 0.0;
                for (int c = 0; c < d.n; ++c) {
                    if (alpha[c] < 0) throw Error("InvalidParameter", "negative power on a disc");
                    s += std::log(2.0 * M_PI) +
                         log_radial_moment(2.0 * alpha[c] + 1.0 + (d.n == 1 ? pw : 0.0), 0.0,
                                           d.radii[c]);
                }
                out.push_back(s);
            }
            return out;
        }
        case DomainKind::UnitBall: {
            for (const auto& alpha : b.indices) {
                int tot = 0;
                for (int a : alpha) {
                    if (a < 0) throw Error("InvalidParameter", "negative power on the ball");
                    tot += a;
                }
                out.push_back(log_sphere_factor(d.n, alpha) +
                              log_radial_moment(2.0 * tot + 2.0 * d.n - 1.0 + pw, 0.0, 1.0));
            }
            return out;
        }
        case DomainKind::Annulus: {
            for (const auto& alpha : b.indices)
                out.push_back(std::log(2.0 * M_PI) +
                              log_radial_moment(2.0 * alpha[0] + 1.0 + pw, 1.0, d.R));
            return out;
        }
        default:
            throw Error("UnsupportedWeight", "no diagonal structure for this domain");
    }
}

}  // namespace

BergmanSpace build_space(DomainPtr d, const WeightSpec& w, const BasisSpec& b) {
    if (b.kind == BasisSpec::Kind::ProductBasis || d->kind == DomainKind::Product)
        throw Error("InvalidParameter", "use product_space for product domains");
    BergmanSpace s;
    s.domain = d;
    s.weight = w;
    s.basis = b;
    s.center = (d->kind == DomainKind::Polydisc) ? d->center : cvec(d->n, cplx(0.0));

    bool want_diagonal = true;
    try {
        s.logNorm2 = diagonal_log_norms(*d, w, b);
    } catch (const Error&) {
        want_diagonal = false;
    }

    if (want_diagonal) {
        s.diagonal = true;
        s.norm2.resize(s.logNorm2.size());
        for (std::size_t i = 0; i < s.norm2.size(); ++i) s.norm2[i] = std::exp(s.logNorm2[i]);
        // tail diagnostic: weight of one extra degree/exponent block at a
        // representative interior point
        try {
            BasisSpec wider = b;
            if (b.kind == BasisSpec::Kind::Monomial)
                wider = BasisSpec::monomial(d->n, b.maxDegree + 1);
            else
                wider = BasisSpec::laurent(b.kmin - 1, b.kmax + 1);
            auto widerLog = diagonal_log_norms(*d, w, wider);
            cvec zref(d->n);
            if (d->kind == DomainKind::Annulus) {
                zref[0] = cplx(std::sqrt(d->R), 0.0);
            } else {
                for (int c = 0; c < d->n; ++c) {
                    double rc = (d->kind == DomainKind::Polydisc) ? d->radii[c] : 1.0;
                    zref[c] = s.center[c] + 0.7 * rc / std::sqrt(static_cast<double>(d->n));
                }
            }
            double core = 0.0, tail = 0.0;
            BergmanSpace wideSpace = s;
            wideSpace.basis = wider;
            wideSpace.logNorm2 = widerLog;
            wideSpace.norm2.assign(widerLog.size(), 0.0);
            for (std::size_t i = 0; i < wider.indices.size(); ++i) {
                double v = std::norm(wideSpace.eval_orthonormal(i, zref));
                bool inOld = std::find(b.indices.begin(), b.indices.end(), wider.indices[i]) !=
                             b.indices.end();
                (inOld ? core : tail) += v;
            }
            s.truncationDiagnostic = (core > 0.0) ? tail / core : 0.0;
        } catch (const Error&) {
            s.truncationDiagnostic = 0.0;
        }
        return s;
    }

    // Gram path: assemble from a sampling/tensor rule and orthonormalize.
    QuadratureRule rule = quadrature_for(*d, w, 2 * b.maxDegree + 2);
    const std::size_t N = b.indices.size();
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(N, N);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        Eigen::VectorXcd v(N);
        for (std::size_t i = 0; i < N; ++i) {
            cplx val = 1.0;
            for (int c = 0; c < d->n; ++c) val *= std::pow(rule.nodes[q][c], b.indices[i][c]);
            v(i) = val;
        }
        G.noalias() += rule.weights[q] * v * v.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    double lmax = es.eigenvalues().maxCoeff();
    if (!(lmax > 0.0)) throw Error("IllConditionedGram", "Gram matrix not positive");
    std::vector<int> keep;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 1e-12 * lmax) keep.push_back(i);
    if (keep.empty()) throw Error("IllConditionedGram", "Gram matrix numerically zero");
    s.diagonal = false;
    s.orthomap.resize(N, keep.size());
    BasisSpec reduced = b;  // keep index list; rank reduction happens in orthomap columns
    for (std::size_t j = 0; j < keep.size(); ++j)
        s.orthomap.col(j) =
            es.eigenvectors().col(keep[j]) / std::sqrt(es.eigenvalues()(keep[j]));
    s.norm2.resize(N);
    s.logNorm2.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        s.norm2[i] = G(i, i).real();
        s.logNorm2[i] = std::log(std::max(s.norm2[i], 1e-300));
    }
    s.truncationDiagnostic = rule.errorBound;
    (void)reduced;
    return s;
}

BergmanSpace product_space(const BergmanSpace& a, const BergmanSpace& b) {
    if (!a.diagonal || !b.diagonal)
        throw Error("UnsupportedWeight", "product spaces need diagonal factors");
    BergmanSpace s;
    s.domain = make_product(a.domain, b.domain);
    s.weight = a.weight;
    s.basis = BasisSpec::product(a.basis, b.basis);
    s.diagonal = true;
    s.center = a.center;
    s.center.insert(s.center.end(), b.center.begin(), b.center.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            s.logNorm2.push_back(a.logNorm2[i] + b.logNorm2[j]);
            s.norm2.push_back(std::exp(s.logNorm2.back()));
        }
    s.truncationDiagnostic = a.truncationDiagnostic + b.truncationDiagnostic;
    return s;
}

KernelReport kernel_at(const BergmanSpace& s, const cvec& z, const cvec& w) {
    if (!contains(*s.domain, z) || !contains(*s.domain, w))
        throw Error("PointOutsideDomain", "kernel_at: point outside domain");
    const std::size_t N = s.diagonal ? s.size() : static_cast<std::size_t>(s.orthomap.cols());
    std::vector<double> re(N), im(N);
    for (std::size_t i = 0; i < N; ++i) {
        cplx t = s.eval_orthonormal(i, z) * std::conj(s.eval_orthonormal(i, w));
        re[i] = t.real();
        im[i] = t.imag();
    }
    KernelReport rep;
    rep.value = cplx(pairwise_sum(re), pairwise_sum(im));
    rep.diagonal = rep.value.real();
    rep.truncation = static_cast<int>(N);
    // tail heuristic: contribution of the extreme degree block
    double tail = 0.0;
    if (s.diagonal && !s.basis.indices.empty()) {
        int dmax = 0;
        for (const auto& a : s.basis.indices) {
            int t2 = 0;
            for (int e : a) t2 += std::abs(e);
            dmax = std::max(dmax, t2);
        }
        for (std::size_t i = 0; i < N; ++i) {
            int t2 = 0;
            for (int e : s.basis.indices[i]) t2 += std::abs(e);
            if (t2 == dmax)
                tail += std::abs(s.eval_orthonormal(i, z)) * std::abs(s.eval_orthonormal(i, w));
        }
    }
    rep.tailEstimate = tail;
    return rep;
}

JetFunctional JetFunctional::derivative(cvec point, int m) {
    JetFunctional j;
    j.point = std::move(point);
    j.m = m;
    std::vector<int> alpha(j.point.size(), 0);
    alpha[0] = m;
    j.H.push_back({alpha, cplx(1.0)});
    return j;
}

double jet_kernel(const BergmanSpace& s, const JetFunctional& j) {
    if (!contains(*s.domain, j.point)) throw Error("PointOutsideDomain", "jet_kernel point");
    const std::size_t N = s.size();
    Eigen::VectorXcd h(N);
    for (std::size_t i = 0; i < N; ++i) {
        cplx acc = 0.0;
        for (const auto& [alpha, c] : j.H) acc += c * s.deriv_orthonormal(i, alpha, j.point);
        h(i) = std::conj(acc);
    }
    auto rows = multiindices_upto(static_cast<int>(j.point.size()), j.m - 1);
    if (j.m > 0 && !rows.empty()) {
        Eigen::MatrixXcd CH(N, rows.size());  // columns span the representers
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t i = 0; i < N; ++i)
                CH(i, r) = std::conj(s.deriv_orthonormal(i, rows[r], j.point));
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(CH);
        qr.setThreshold(1e-12);
        const int rank = qr.rank();
        Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(N, rank);
        h -= Q * (Q.adjoint() * h);
    }
    return h.squaredNorm();
}

}  // namespace l2lab
