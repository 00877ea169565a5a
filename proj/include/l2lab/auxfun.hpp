#ifndef L2LAB_AUXFUN_HPP
#define L2LAB_AUXFUN_HPP

#include "l2lab/numerics.hpp"

namespace l2lab {

/// Density family c(t) entering the weighted estimates.  Admissibility:
/// liminf_{t→-∞} c(t) e^{-t} > 0 with ∫ c < ∞, and the strict inequality
/// (∫_t^A c)² > c(t) ∫_t^A ∫_τ^A c — both verified numerically on a grid.
struct CFamily {
    enum class Kind { One, ExpT, Piecewise, Rational };
    Kind kind = Kind::One;
    // Rational parameters: c(t) = e^t / (1 + e^{t/(m+p)})^{m+p+eps}
    int m = 0, p = 1;
    double eps = 1.0;

    double operator()(double t) const;
    std::vector<double> kinks(double lo, double hi) const;  // interior smoothness breaks

    static CFamily one() { return {}; }
    static CFamily exp_t();
    static CFamily piecewise();  // 1 on (0,1), e^{t-1} on [1, a+1)
    static CFamily rational(int m, int p, double eps);
};

/// Check both admissibility conditions of c on (lo, hi); throws InadmissibleC.
void check_admissible(const CFamily& c, double lo, double hi, int gridPoints = 200);

/// u(t) = a - log ∫_t^{a+1} c,  s(t) = ∫∫c / ∫c,  g(t) = ((∫c)² - c ∫∫c)/(c ∫c)
/// on (0, a+1), with the inner integrals evaluated by adaptive quadrature.
struct AuxTriple {
    double a = 0.0;
    CFamily c;
    double u(double t) const;
    double s(double t) const;
    double g(double t) const;
    double I1(double t) const;  // ∫_t^{a+1} c
    double I2(double t) const;  // ∫_t^{a+1} I1
};

AuxTriple build_aux_triple(const CFamily& c, double a);

struct OdeResiduals {
    double first = 0.0;    // s u' - s' - 1
    double second = 0.0;   // s u'' - s'' - s'²/g
    double closure = 0.0;  // e^{a-u}/(s+g) - c
};

/// Residuals via high-order finite differences on `grid` interior points,
/// staying clear of kinks of c.
OdeResiduals verify_ode_identities(const AuxTriple& t, int grid);

/// Decreasing cutoff profile χ on (0,1) with χ(0+) = 1, χ(1-) = 0.
struct Chi {
    std::function<double(double)> chi;
    std::function<double(double)> dchi;
    static Chi linear();              // 1 - t
    static Chi kappa_profile(double kappa);  // (e^κ - e^{κt})/(e^κ - 1)
};

/// C(χ,c) = sup_{0<t<1} ( χ'(t)² ∫_t^{a+1} c + c(t)/(c(t)-t) χ(t)² ).
double constant_C(const Chi& chi, const CFamily& c, double a);

struct KappaResult {
    double kappa = 0.0;
    double boundValue = 0.0;   // e^a + (κ e^κ/(e^κ-1))² - 1
    double boundTarget = 0.0;  // e^a + (25/16) e^{-a}
    bool boundHolds = false;
};

/// Unique κ > 0 with κ/(e^κ - 1) = sqrt(1 - e^{-a}), a >= 1, by bisection.
KappaResult kappa_constant(double a);

/// Ratio ∫_0^1 τ^{m+p-1}(1-τ)^{ε-1} dτ / ∫_0^{1/2} τ^{m+p-1}(1-τ)^{ε-1} dτ.
double demext_constant(int m, int p, double eps);

/// Piecewise-quadratic plateau smoothing v_{a,b} and its cutoff χ = 1 - v'.
std::pair<double, double> smoothing_eval(double a, double b, double t);

}  // namespace l2lab

#endif
