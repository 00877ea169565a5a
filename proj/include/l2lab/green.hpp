#ifndef L2LAB_GREEN_HPP
#define L2LAB_GREEN_HPP

#include "l2lab/domain.hpp"

namespace l2lab {

/// Pluricomplex Green function G_d(z, z0).  Supported pairs: disc/ball/polydisc
/// with any pole, annulus with any pole, balanced domains with pole 0 (where
/// G = log h), products via the max of the factors.  Returns -inf at z = z0.
double green_eval(const DomainSpec& d, const cvec& z0, const cvec& z);

/// ψ = multiplier * G_d(·, z0) packaged with an evaluator.
std::shared_ptr<const PoleFunction> make_pole(DomainPtr d, cvec z0, double multiplier);

struct CapacityResult {
    double value = 0.0;  // c_β(z0)
    std::vector<std::pair<double, double>> extrapolationTrace;  // (radius, estimate)
    double errorEstimate = 0.0;
};

/// Logarithmic capacity c_β(z0) = lim_{w→z0} exp(G(w,z0) - log|w - z0|) for
/// 1-D domains, by angle-averaged Richardson extrapolation over shrinking
/// radii.  Throws NotOneDimensional / NonConvergent.
CapacityResult log_capacity(const DomainSpec& d, const cvec& z0);

/// Vol({ψ < -a}); exact for radial poles on circled domains, polar-bisection
/// quadrature for 1-D star-shaped sublevels, Monte Carlo fallback.
double sublevel_volume(const PoleFunction& p, double a);

/// lim_{a→∞} e^a ∫_{ψ<-a} g dλ for a 1-D pole with multiplier 2, extrapolated
/// from a ∈ {4,6,8,10}.  Reference value: π g(z0) / c_β(z0)².
double tube_mass_limit(const PoleFunction& p, const std::function<double(const cvec&)>& g);

/// Azukawa pseudometric A_d(z; X) = lim_{λ→0} (G(z + λX, z) - log|λ|).
double azukawa_metric(const DomainSpec& d, const cvec& z, const cvec& X);

struct AzukawaIndicatrix {
    cvec center;
    std::vector<std::pair<cvec, double>> directionalValues;  // (unit ξ, A(z;ξ))
    double volume = 0.0;
    double errorEstimate = 0.0;
};

/// Indicatrix I_d(z) = {X : A(z;X) < 0}; volume via the balanced radial
/// representation Vol = (1/2n) ∫_{S^{2n-1}} r(ξ)^{2n} dσ with r = e^{-A}.
AzukawaIndicatrix indicatrix_volume(const DomainSpec& d, const cvec& z, int directions);

}  // namespace l2lab

#endif
