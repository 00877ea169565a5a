#ifndef L2LAB_DOMAIN_HPP
#define L2LAB_DOMAIN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "l2lab/numerics.hpp"

namespace l2lab {

struct DomainSpec;
using DomainPtr = std::shared_ptr<const DomainSpec>;

/// ψ = multiplier * G_Ω(·, z0): a negative function with a logarithmic pole.
/// The evaluator is wired up by green_capacity (make_pole); domain_catalog only
/// carries the record so sublevel domains can be described.
struct PoleFunction {
    DomainPtr domain;
    cvec z0;
    double multiplier = 2.0;
    std::function<double(const cvec&)> eval;  // z -> ψ(z) in [-inf, 0)
};

enum class DomainKind { UnitBall, Polydisc, Balanced, Annulus, Product, Sublevel };

/// A model domain in C^n.  Immutable after construction (build_domain).
///
/// Polydisc supports an optional center offset (used internally for sublevel
/// discs of Green functions, which are round but not centred at 0).
struct DomainSpec {
    DomainKind kind;
    int n = 1;  // complex dimension

    std::vector<double> radii;                       // Polydisc
    cvec center;                                     // Polydisc offset (default 0)
    double R = 0.0;                                  // Annulus: 1 < |z| < R
    std::function<double(const cvec&)> gauge;        // Balanced: h, homogeneous
    DomainPtr left, right;                           // Product
    DomainPtr base;                                  // Sublevel
    std::shared_ptr<const PoleFunction> pole;        // Sublevel
    double level = 0.0;                              // Sublevel: {ψ < -level}
};

/// Radial weights e^{-φ}.  RadialLog: φ = α log|z|² (so e^{-φ} = |z|^{-2α});
/// HarmonicLog: η = α log|z|, weight e^{-2η} = |z|^{-2α} — same radial profile,
/// kept distinct because η enters the Suita reports.  Grid: sampled radial
/// profile, piecewise-linear, non-certified accuracy.
struct WeightSpec {
    enum class Kind { Zero, RadialLog, HarmonicLog, Grid };
    Kind kind = Kind::Zero;
    double alpha = 0.0;
    std::vector<double> gridR, gridPhi;  // Grid: φ samples at radii

    double phi(double r) const;                 // radial profile φ(r)
    double radial_power() const;                // e^{-φ} = r^power (Zero/…Log)
    static WeightSpec zero() { return {}; }
    static WeightSpec radial_log(double a);
    static WeightSpec harmonic_log(double a);
};

struct QuadratureRule {
    std::vector<cvec> nodes;
    std::vector<double> weights;  // include the weight e^{-φ}
    std::string exactness;
    double errorBound = 0.0;

    double integrate(const std::function<double(const cvec&)>& f) const;
};

enum class VolumeMethod { Exact, Quadrature, MonteCarlo };

struct VolumeResult {
    double value = 0.0;
    double errorBound = 0.0;
    std::string method;
};

// -- construction ------------------------------------------------------------

DomainPtr make_unit_ball(int n);
DomainPtr make_polydisc(std::vector<double> radii);
DomainPtr make_polydisc_at(std::vector<double> radii, cvec center);
DomainPtr make_balanced(int n, std::function<double(const cvec&)> gauge);
DomainPtr make_annulus(double R);  // inner radius fixed to 1
DomainPtr make_product(DomainPtr left, DomainPtr right);
DomainPtr make_sublevel(DomainPtr base, std::shared_ptr<const PoleFunction> pole, double a);

bool contains(const DomainSpec& d, const cvec& z);

/// A radius rb such that the domain is contained in {|z_i| < rb for all i}.
double bounding_radius(const DomainSpec& d);

VolumeResult volume(const DomainSpec& d, VolumeMethod method, std::uint64_t seed = 7,
                    std::size_t samples = 200000);

/// Tensor rule (exact angular integration x Gauss radial nodes) on circled
/// domains, exact for z^α z̄^β with |α|,|β| <= degree against the radial
/// weight; Monte Carlo sampling rule with declared errorBound otherwise.
QuadratureRule quadrature_for(const DomainSpec& d, const WeightSpec& w, int degree);

}  // namespace l2lab

#endif
