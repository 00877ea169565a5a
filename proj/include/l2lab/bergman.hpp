#ifndef L2LAB_BERGMAN_HPP
#define L2LAB_BERGMAN_HPP

#include <Eigen/Dense>

#include "l2lab/domain.hpp"

namespace l2lab {

/// Basis of a truncated Bergman space.  `indices` lists per-coordinate
/// exponents (negative entries allowed in the Laurent case).
struct BasisSpec {
    enum class Kind { Monomial, Laurent, ProductBasis };
    Kind kind = Kind::Monomial;
    int maxDegree = 0;          // Monomial
    int kmin = 0, kmax = 0;     // Laurent
    std::vector<std::vector<int>> indices;

    static BasisSpec monomial(int n, int maxDegree);
    static BasisSpec laurent(int kmin, int kmax);
    static BasisSpec product(const BasisSpec& left, const BasisSpec& right);
};

/// All multi-indices in n variables with total order <= m, graded order.
std::vector<std::vector<int>> multiindices_upto(int n, int m);

/// log( 2 π^n α! / (n-1+|α|)! ): integral of |ξ^α|² over the unit sphere
/// S^{2n-1}; combined with a 1-D radial moment it yields ball monomial norms.
double log_sphere_factor(int n, const std::vector<int>& alpha);

/// Truncated weighted Bergman space.  On circled domains with radial weights
/// the monomial/Laurent basis is exactly orthogonal and only the diagonal norm
/// table is stored (in log scale as well: Laurent norms overflow double for
/// large exponent ranges).  Otherwise a Gram matrix is assembled from a
/// sampling rule and orthonormalized with rank-revealing pivoting.
struct BergmanSpace {
    DomainPtr domain;
    WeightSpec weight;
    BasisSpec basis;
    bool diagonal = true;

    std::vector<double> norm2;     // may be +inf when the log value is huge
    std::vector<double> logNorm2;
    cvec center;                   // monomials are taken in (z - center)

    Eigen::MatrixXcd orthomap;     // Gram path: e_i = sum_j orthomap(j,i) b_j
    double truncationDiagnostic = 0.0;

    std::size_t size() const { return basis.indices.size(); }

    /// Orthonormal basis element e_i evaluated at z.
    cplx eval_orthonormal(std::size_t i, const cvec& z) const;
    /// ∂^β e_i at z (falling-factorial rule; valid for Laurent exponents).
    cplx deriv_orthonormal(std::size_t i, const std::vector<int>& beta, const cvec& z) const;
};

BergmanSpace build_space(DomainPtr d, const WeightSpec& w, const BasisSpec& b);

/// Tensor product of two spaces over the product domain; norms multiply.
BergmanSpace product_space(const BergmanSpace& a, const BergmanSpace& b);

struct KernelReport {
    cplx value;
    double diagonal = 0.0;  // meaningful when z == w
    int truncation = 0;
    double tailEstimate = 0.0;
};

KernelReport kernel_at(const BergmanSpace& s, const cvec& z, const cvec& w);

/// Order-m jet functional  f -> Σ_{|α|=m} c_α ∂^α f(point).
struct JetFunctional {
    cvec point;
    int m = 0;
    std::vector<std::pair<std::vector<int>, cplx>> H;

    static JetFunctional derivative(cvec point, int m);  // H = single ∂^m term (1-D)
};

/// sup{ |L_H f(w)|² : ‖f‖<=1, f vanishes to order m-1 at w }, i.e. the squared
/// norm of the Riesz representative of L_H on the jet-vanishing subspace.
/// Returns 0 when the functional vanishes on the truncated subspace.
double jet_kernel(const BergmanSpace& s, const JetFunctional& j);

}  // namespace l2lab

#endif
