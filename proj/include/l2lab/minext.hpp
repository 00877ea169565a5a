#ifndef L2LAB_MINEXT_HPP
#define L2LAB_MINEXT_HPP

#include "l2lab/bergman.hpp"
#include "l2lab/green.hpp"

namespace l2lab {

/// Order-m point-jet equality constraints: targetJet[β] for all |β| <= m.
struct JetConstraint {
    cvec z0;
    int m = 0;
    std::vector<std::pair<std::vector<int>, cplx>> targetJet;
};

/// Jet of the polynomial with raw basis coefficients `coeffs` (one per basis
/// index of s) at z0, up to order m.
JetConstraint jet_of(const BergmanSpace& s, const std::vector<cplx>& coeffs, const cvec& z0,
                     int m);

struct MinExtResult {
    Eigen::VectorXcd ortho;          // coefficients in the orthonormal basis
    std::vector<cplx> raw;           // coefficients per basis index (diagonal spaces)
    double normSquared = 0.0;
    double constraintResidual = 0.0;
    double orthogonalityResidual = 0.0;
};

/// Least-norm element satisfying the jet equalities; rank-revealing solve with
/// pivot threshold 1e-12.  Throws InfeasibleConstraint when the target is not
/// attainable within the truncated space.
MinExtResult minimal_extension(const BergmanSpace& s, const JetConstraint& jc);

/// Same basis with norms recomputed over the sublevel set {ψ < -t} for a
/// radial pole at the origin of a circled domain (disc/polydisc/ball).
BergmanSpace restrict_norms(const BergmanSpace& s, const PoleFunction& p, double t);

struct MinimalIntegralCurve {
    std::vector<double> t;
    std::vector<double> I;
    std::vector<double> quadratureError;
    std::vector<std::vector<cplx>> coefficients;  // raw coefficients of F_t
};

MinimalIntegralCurve minimal_integral_curve(const BergmanSpace& s, const PoleFunction& p,
                                            const std::vector<cplx>& f, int m,
                                            const std::vector<double>& grid);

/// Default grid: log-uniform in r = e^{-t}, `points` samples on r in [rmin, 1].
std::vector<double> default_curve_grid(int points = 33, double rmin = 1e-3);

struct ConcavityReport {
    std::vector<double> secondDifferences;  // chord-slope increments of r -> I(-log r)
    double maxViolation = 0.0;              // largest convexity violation beyond tolerance
    std::vector<double> optimalConstantGap; // I(t_i) e^{t_i} - I(0)  (should be >= -tol)
    bool isNumericallyLinear = false;
    double linearityThreshold = 0.0;
};

ConcavityReport concavity_report(const MinimalIntegralCurve& c);

struct LinearityCheck {
    bool applicable = false;
    bool pass = false;
    double maxCoefficientDeviation = 0.0;
};

/// When the curve is numerically linear, the minimizers must all agree with
/// the t = 0 minimizer coefficientwise (restriction property).
LinearityCheck linearity_restriction_check(const MinimalIntegralCurve& c);

}  // namespace l2lab

#endif
