#pragma once

#include "qsl21/scalars.hpp"

namespace qsl21 {

enum class Basis { distinguished, fermionic };

/// Images of the six Chevalley generators under some representation of the
/// algebra (one site, or a coproduct image on several sites). All matrices
/// share one dimension. Plain matrix products of these images realize the
/// defining relations (the Jordan-Wigner transform is already inside
/// chain-level images).
struct AlgebraImages {
    Mat e1, e2, f1, f2, k1, k2;
};

struct GeneratorSet : AlgebraImages {
    Basis basis = Basis::distinguished;
    /// generator degrees in this basis: 1 for the odd simple generators
    int deg_e1 = 0, deg_e2 = 1; // fermionic basis: both 1
};

/// The one-parameter four-dimensional representation in the distinguished basis.
///
///   e1 = -omega q E23          f1 = -q^{-1} E32
///   k1 = omega diag(1, q, 1/q, 1)      k2 = diag(lam, lam, q lam, q lam)
///   e2 = q^{-1/4} s E12 + q^{1/4} (y/s) E34
///   f2 = q^{1/4} s E21 + q^{-1/4} (y/s) E43,   s = sqrt([mu])
///
/// The e2/f2 gauge is the one in which the two-site invariant operators come
/// out symmetric (entry pairs share the coefficient q^{-+1/2} sqrt(x)); the
/// explicit braid-matrix entry list and the fermionic hopping amplitudes both
/// live in this gauge.
GeneratorSet build_rep(const DeformParams& p);

/// e3 = e1 e2 - q^{-1} e2 e1, f3 = f2 f1 - q f1 f2 (distinguished basis only)
std::pair<Mat, Mat> build_e3f3(const GeneratorSet& g, const DeformParams& p);

/// change of simple-root system: K1 = (k1 k2)^{-1}, K2 = k2,
/// E1 = e3, E2 = f2 k2^{-1}, F1 = -f3, F2 = k2 e2.
GeneratorSet fermionic_basis(const GeneratorSet& g, const DeformParams& p);

/// one entry per defining relation of the basis at hand
RelationReport check_defining_relations(const GeneratorSet& g, const DeformParams& p,
                                        const ToleranceConfig& tol);

enum class QSign { plus, minus };

/// Q^{(+-)}_p evaluated on arbitrary algebra images (one site or chain level)
Mat casimir_q(long p, QSign sign, const AlgebraImages& g, const DeformParams& pr);

/// C_p by the closed one-formula route; throws FormulaMismatch if it disagrees
/// with Q^+_p + Q^-_p beyond identity_tol (bug trap, not a parameter issue)
Mat casimir_c(long p, const AlgebraImages& g, const DeformParams& pr,
              const ToleranceConfig& tol = {});

/// S_p = Q^+_p - Q^-_p
Mat scasimir_s(long p, const AlgebraImages& g, const DeformParams& pr);

/// product/exchange relations of the Q, C, S families plus the (-1)^F role of
/// S_p/c_p, over the index range [p_lo, p_hi]
RelationReport check_casimir_relations(const GeneratorSet& g, const DeformParams& pr,
                                       long p_lo, long p_hi, const ToleranceConfig& tol);

} // namespace qsl21
