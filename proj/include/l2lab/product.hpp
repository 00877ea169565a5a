#ifndef L2LAB_PRODUCT_HPP
#define L2LAB_PRODUCT_HPP

#include "l2lab/minext.hpp"

namespace l2lab {

/// Orthogonal decomposition of f along the chain A² ⊇ J_0(S) ⊇ … ⊇ J_m(S),
/// where J_k(S) = {f vanishing to order k at every point of S}.  The layer
/// H_k = J_{k-1} ⊖ J_k; components[k] is the H_k part, remainder lies in J_m.
struct DecompositionLayers {
    std::vector<std::vector<cplx>> components;  // raw coefficients, k = 0..m
    std::vector<cplx> remainder;
    double orthogonalityResidual = 0.0;
    double reconstructionResidual = 0.0;
};

DecompositionLayers layer_decompose(const BergmanSpace& s, const std::vector<cvec>& S, int m,
                                    const std::vector<cplx>& f);

/// Orthogonal projection of f (raw coefficients) onto J_m(S); m = -1 is the
/// identity.
std::vector<cplx> project_vanishing(const BergmanSpace& s, const std::vector<cvec>& S, int m,
                                    const std::vector<cplx>& f);

struct ProductMinExtReport {
    double normF = 0.0;            // ‖F‖, minimal for order m1+m2 on S1 x S2
    double normF1 = 0.0, normF2 = 0.0;
    double margin = 0.0;           // ‖F‖ - ‖F1‖‖F2‖ (>= 0 up to tolerance)
    bool equalityExpected = false; // f_i vanishes to order m_i - 1 on S_i
    double tensorMismatch = 0.0;   // max |F - F1 ⊗ F2| coefficientwise
};

ProductMinExtReport product_min_extension_check(const BergmanSpace& left,
                                                const BergmanSpace& right,
                                                const std::vector<cplx>& f1,
                                                const std::vector<cplx>& f2, const cvec& s1,
                                                const cvec& s2, int m1, int m2);

}  // namespace l2lab

#endif
