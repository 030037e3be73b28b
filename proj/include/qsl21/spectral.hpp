#pragma once

#include "qsl21/braid.hpp"

#include <random>

namespace qsl21 {

/// crossing data: rho = ln q and M = diag(1, -1, -q^2, q^2) (traceless)
struct CrossingData {
    Mat m;
    cplx rho_shift;
};

CrossingData make_crossing_data(const DeformParams& p);

/// Baxterised R-check(u) = Id + ((e^u - 1) b + (e^{-u} - 1) b^{-1}) / x
Mat rcheck(cplx u, const BraidPair& pair, const DeformParams& p);

/// R(u) = P * R-check(u)
Mat rmat(cplx u, const BraidPair& pair, const DeformParams& p);

/// Laurent coefficients of R-check in z = e^u: (z^-1, z^0, z^1) pieces
struct RcheckLaurent {
    Mat c_minus, c_zero, c_plus;
    Mat at(cplx u) const;
};
RcheckLaurent rcheck_laurent(const BraidPair& pair, const DeformParams& p);

/// inversion scalar: R-check(u) R-check(-u) = zeta(u) Id, zeta(0) = 1,
/// from the eigenvalue factorization r(u) r(-u)
cplx zeta(cplx u, const DeformParams& p);

/// the alternative pairing of the q-dependent factors; it fails zeta(0) = 1
/// and is kept only for the informative comparison in the reports
cplx zeta_alt_pairing(cplx u, const DeformParams& p);

/// independent oracle: r_a(u) r_a(-u) for the cubic root beta_a of b; all three
/// must coincide and equal zeta(u)
cplx zeta_eigen_oracle(cplx u, int which_root, const DeformParams& p);

/// closed-form crossing scalar xi; the measured crossing scalar equals
/// -xi(u + rho) in these conventions (ratio reported, never asserted)
cplx xi_closed_form(cplx u, const DeformParams& p);

/// seeded complex samples in the square |Re|,|Im| <= 1
std::vector<cplx> seeded_samples(unsigned seed, int count);

RelationReport ybe_check(const BraidPair& pair, const DeformParams& p,
                         const ToleranceConfig& tol, int samples = 20);
RelationReport inversion_check(const BraidPair& pair, const DeformParams& p,
                               const ToleranceConfig& tol, int samples = 10);
RelationReport pt_check(const BraidPair& pair, const DeformParams& p,
                        const ToleranceConfig& tol, int samples = 10);
RelationReport crossing_check(const BraidPair& pair, const DeformParams& p,
                              const CrossingData& cd, const ToleranceConfig& tol,
                              int samples = 10);

} // namespace qsl21
