#include "qsl21/scalars.hpp"
#include "qsl21/linalg.hpp"

#include <cmath>

namespace qsl21 {

cplx qbracket(cplx q, cplx n) {
    cplx den = q - 1.0 / q;
    if (std::abs(den) < 1e-12) throw DegenerateQ("q - q^{-1} vanishes");
    return (std::pow(q, n) - std::pow(q, -n)) / den;
}

cplx qbracket(cplx n, const DeformParams& p) { return qbracket(p.q, n); }

void check_genericity(cplx q, const ToleranceConfig& tol) {
    if (std::abs(q) == 0.0) throw DegenerateQ("q = 0");
    if (std::abs(q - 1.0 / q) < tol.genericity_tol)
        throw DegenerateQ("q - q^{-1} below genericity tolerance");
    for (int k = 1; k <= 8; ++k)
        if (std::abs(std::pow(q, k) - 1.0) < tol.genericity_tol ||
            std::abs(std::pow(q, -k) - 1.0) < tol.genericity_tol)
            throw DegenerateQ("q^" + std::to_string(k) + " too close to 1");
}

DeformParams derive_params(cplx q, cplx mu, int omega, const ToleranceConfig& tol) {
    tol.validate();
    check_genericity(q, tol);
    if (omega != 1 && omega != -1) throw Error("omega must be +1 or -1");

    DeformParams p;
    p.q = q;
    p.omega = omega;
    cplx lambda = std::exp(mu * std::log(q));
    // snap onto the Temperley-Lieb point so [2mu+1] vanishes exactly there
    if (std::abs(lambda * lambda - 1.0 / q) <= tol.genericity_tol) {
        p.tl_mode = true;
        mu = -0.5;
        lambda = std::exp(mu * std::log(q));
    }
    p.mu = mu;
    p.lambda = lambda;
    p.x = (lambda - 1.0 / lambda) * (q * lambda - 1.0 / (q * lambda));
    p.y = std::sqrt(p.x) / (q - 1.0 / q);

    // x = q lambda^2 + q^{-1} lambda^{-2} - q - q^{-1}
    cplx x_alt = q * lambda * lambda + 1.0 / (q * lambda * lambda) - q - 1.0 / q;
    if (std::abs(p.x - x_alt) > tol.identity_tol * std::max(1.0, std::abs(p.x)))
        throw FormulaMismatch("the two closed forms of x disagree");

    if (!p.tl_mode) {
        if (std::abs(p.x) < tol.genericity_tol)
            throw DegenerateRepresentation("x = 0 outside the Temperley-Lieb point");
        for (cplx n : {mu, mu + 1.0, 2.0 * mu, 2.0 * mu + 1.0, 2.0 * mu + 2.0})
            if (std::abs(qbracket(q, n)) < tol.genericity_tol)
                throw DegenerateRepresentation("q-bracket denominator vanishes");
    }
    return p;
}

Mat cartan_qbracket(const Mat& K, long shift, const DeformParams& p) {
    for (Eigen::Index i = 0; i < K.rows(); ++i)
        if (std::abs(K(i, i)) == 0.0) throw SingularCartan("zero diagonal entry in K");
    cplx qs = std::pow(p.q, cplx(double(shift), 0.0));
    return (qs * K - (1.0 / qs) * Mat(K.inverse())) / (p.q - 1.0 / p.q);
}

} // namespace qsl21
