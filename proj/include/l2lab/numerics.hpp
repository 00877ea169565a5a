#ifndef L2LAB_NUMERICS_HPP
#define L2LAB_NUMERICS_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace l2lab {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Single error type for the whole library; `tag` is a stable machine-readable
/// identifier (e.g. "InvalidParameter", "NonConvergent") used by the CLI to map
/// failures to exit codes and by tests to assert on the failure mode.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& msg)
        : std::runtime_error(tag + ": " + msg), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

/// Gauss-Legendre rule on [-1,1]; nodes/weights computed by Newton iteration on
/// the three-term recurrence and cached per order.  Exact for polynomials of
/// degree <= 2n-1.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

/// Integrate f over [a,b] with an n-point Gauss-Legendre rule.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n);

/// log of  ∫_{r0}^{r1} r^p * factor(r) dr  for possibly huge |p| (annulus
/// Laurent moments reach r^±400), computed in log scale so the result is finite
/// even when the integral overflows double.  `factor` must be positive and
/// moderate; pass nullptr for factor ≡ 1.  When r0 == 0 the integrand is mapped
/// through r = r1 * u^4 so that integer powers stay polynomial (Gauss-exact)
/// and mild endpoint singularities (p > -1) are resolved.
double log_radial_moment(double p, double r0, double r1,
                         const std::function<double(double)>& factor = nullptr);

/// Pairwise (cascade) summation: deterministic and accurate independent of
/// accumulation order effects in naive loops.
double pairwise_sum(const std::vector<double>& v);

/// Polynomial (Neville) extrapolation of samples (h_i, v_i) to h = 0.
/// Returns {limit, errorEstimate}; errorEstimate is the magnitude of the last
/// Neville correction.  Samples need not be sorted.
std::pair<double, double> extrapolate_to_zero(std::vector<std::pair<double, double>> samples);

/// Golden-section refinement of a local maximum of f inside [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi, double xtol);

/// Golden-section refinement of a local minimum of f inside [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol);

/// Bisection for f(x) = 0 on [lo, hi]; requires a sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol);

}  // namespace l2lab

#endif
