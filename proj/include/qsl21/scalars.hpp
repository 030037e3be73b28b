#pragma once

#include "qsl21/types.hpp"

namespace qsl21 {

/// q-bracket [n] = (q^n - q^{-n})/(q - q^{-1}), principal powers
cplx qbracket(cplx n, const DeformParams& p);
cplx qbracket(cplx q, cplx n); // free-standing variant used before params exist

/// [h-word + shift] evaluated from the diagonal matrix K realizing q^{h-word}:
/// (q^shift K - q^{-shift} K^{-1}) / (q - q^{-1}).
/// Avoids matrix logarithms, so omega = -1 (sign entries in k1) stays exact.
Mat cartan_qbracket(const Mat& K, long shift, const DeformParams& p);

/// guards: q != 0, |q^k - 1| > tol for 1 <= |k| <= 8
void check_genericity(cplx q, const ToleranceConfig& tol);

} // namespace qsl21
