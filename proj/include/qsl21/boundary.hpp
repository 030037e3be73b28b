#pragma once

#include "qsl21/spectral.hpp"

namespace qsl21 {

enum class KSide { minus, plus };
enum class KFamily { trivial, a, b };

struct KMatrixSpec {
    KSide side = KSide::minus;
    KFamily family = KFamily::trivial;
    cplx c = 0.0; // free parameter, unused for trivial
};

/// diagonal reflection matrices; K^-(0) = Id for every family
Mat k_minus(const KMatrixSpec& spec, cplx u, const DeformParams& p);

/// K^+(u) = K^-(-u - rho)^t M; trivial family gives M; tr K^+(0) = 0
Mat k_plus(const KMatrixSpec& spec, cplx u, const DeformParams& p, const CrossingData& cd);

RelationReport reflection_residual_minus(const KMatrixSpec& spec, const BraidPair& pair,
                                         const DeformParams& p, const ToleranceConfig& tol,
                                         int samples = 20);
RelationReport reflection_residual_plus(const KMatrixSpec& spec, const BraidPair& pair,
                                        const DeformParams& p, const CrossingData& cd,
                                        const ToleranceConfig& tol, int samples = 20);

/// closed-form one-site boundary operators in number-operator form.
/// B1 = (1/2) dK^-/du|_0 up to an additive multiple of the identity;
/// BL comes from the second-derivative construction, with the parameter
/// redefinition C+ = q lambda^2 C'+ already applied (so it takes C'+).
Mat boundary_term_b1(KFamily family, cplx c_minus, const DeformParams& p);
Mat boundary_term_bl(KFamily family, cplx c_plus_prime, const DeformParams& p);

} // namespace qsl21
