#pragma once

#include "qsl21/coproduct.hpp"

namespace qsl21 {

struct ProjectorTriple {
    Mat o0, o1, o2; // ranks 4, 8, 4
};

struct BraidPair {
    Mat b, binv;
};

/// the three invariant projectors, as linear combinations of
/// (rho(x)rho)Delta(C_p) for p = base_p, base_p+1, base_p+2
ProjectorTriple projectors_from_casimirs(const GeneratorSet& g, const DeformParams& p,
                                         long base_p = 0);

/// residuals of Delta(C_p) = lambda^{8p-4} ([2mu][2mu+1] O0
///   + q^{2p-1}[2mu][2mu+2] O1 + q^{4p-2}[2mu+1][2mu+2] O2) for each p
RelationReport check_decomposition(const GeneratorSet& g, const DeformParams& p,
                                   long p_lo, long p_hi, const ProjectorTriple& t,
                                   const ToleranceConfig& tol);

/// braid pair from the projector formulas, cross-checked entrywise against the
/// explicit entry list; throws FormulaMismatch on disagreement
BraidPair braid_pair(const GeneratorSet& g, const DeformParams& p,
                     const ToleranceConfig& tol = {});

/// the explicit entry lists alone (works in tl_mode too; principal sqrt(x))
BraidPair braid_pair_explicit(const DeformParams& p);

/// invert the braid formulas back to the projectors
ProjectorTriple projectors_from_braid(const BraidPair& pair, const DeformParams& p);

/// cubic characteristic polynomials, braid relation, far commutation and the
/// supplementary relation, on three- and four-site embeddings
RelationReport check_cubic_algebra(const BraidPair& pair, const DeformParams& p,
                                   const ToleranceConfig& tol);

/// least-squares probe of the BWM quotient relations on the idempotents of
/// span{Id, b, b^-1}; they are expected to FAIL (large post-fit residuals)
RelationReport bwm_failure_probe(const BraidPair& pair, const GeneratorSet& g,
                                 const DeformParams& p, const ToleranceConfig& tol);

/// eigenvalue-count rank of an idempotent (|ev - 1| <= spectrum_tol)
int projector_rank(const Mat& o, const ToleranceConfig& tol);

} // namespace qsl21
