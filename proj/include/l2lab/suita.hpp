#ifndef L2LAB_SUITA_HPP
#define L2LAB_SUITA_HPP

#include "l2lab/bergman.hpp"
#include "l2lab/green.hpp"

namespace l2lab {

/// π e^{-2η(z0)} B^{(m)}(z0) versus m!(m+1)! c_β(z0)^{2m+2} on a disc or an
/// annulus, with the harmonic weight η = α log|z| (annulus; α = 0 on the disc).
struct SuitaReport {
    cplx z0;
    int m = 0;
    double alpha = 0.0;
    double piB = 0.0;
    double rhs = 0.0;
    double gap = 0.0;              // piB - rhs, should be >= -errorBound
    double errorBound = 0.0;
    double capacity = 0.0;
    int truncation = 0;
};

SuitaReport suita_report(const DomainSpec& d, cplx z0, int m, double alpha, int truncation = 200);

struct EqualityLocus {
    double R = 0.0;
    int m = 0;
    std::vector<double> detected;   // radii |z0| with |gap| below threshold
    std::vector<double> predicted;  // R^{k/(m+1)}, k = 1..m
    std::vector<double> flagged;    // near-zero minima that fail refinement
    double minGap = 0.0;            // smallest gap seen on the scan grid
};

/// Scan |z0| over (1, R), refine gap minima, and compare against the predicted
/// equality radii R^{k/(m+1)}.
EqualityLocus equality_locus_scan(double R, int m, double alpha, int radialGrid,
                                  int truncation = 200);

/// B_t(z0) e^{-t} for the sublevel discs Ω_t = {2 G_D(·, z0) < -t} of the unit
/// disc; the sequence is nonincreasing in t and constant on the disc.
std::vector<double> kernel_deterioration(cplx z0, const std::vector<double>& tgrid,
                                         int truncation = 160);

}  // namespace l2lab

#endif
