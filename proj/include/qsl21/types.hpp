#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsl21 {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using DiagMat = Eigen::MatrixXcd;

// ---- error taxonomy ----------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateQ : Error { using Error::Error; };
struct DegenerateRepresentation : Error { using Error::Error; };
struct DegenerateX : Error { using Error::Error; };
struct SingularCartan : Error { using Error::Error; };
struct WrongBasis : Error { using Error::Error; };
struct FormulaMismatch : Error { using Error::Error; };
struct ConventionUnresolvable : Error { using Error::Error; };
struct SiteOutOfRange : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct UnknownToken : Error { using Error::Error; };
struct PoleAtC : Error { using Error::Error; };
struct NotTLMode : Error { using Error::Error; };
struct ScalarCasimirZero : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };

// ---- parameter point ----------------------------------------------------

struct ToleranceConfig {
    double identity_tol = 1e-10;   // relative, vs Frobenius norms
    double fd_tol = 1e-5;          // finite-difference comparisons
    double spectrum_tol = 1e-8;    // eigenvalue matching
    double genericity_tol = 1e-6;
    unsigned seed = 7;

    void validate() const {
        if (identity_tol <= 0 || fd_tol <= 0 || spectrum_tol <= 0 || genericity_tol <= 0)
            throw Error("tolerances must be strictly positive");
    }
};

/// The deformation-parameter point (q, mu, omega) with derived scalars.
/// lambda = q^mu (principal log), x = (lambda-1/lambda)(q lambda - 1/(q lambda)),
/// y = sqrt(x)/(q - 1/q) with the principal square root; the same branch of y is
/// used by every module (braid entries, hopping amplitudes) so they agree without
/// sign patching.
struct DeformParams {
    cplx q;
    cplx mu;
    int omega = +1;      // +1 or -1, selects one of the two inequivalent representations
    cplx lambda;         // q^mu
    cplx x;              // (lambda - 1/lambda)(q lambda - 1/(q lambda))
    cplx y;              // sqrt(x)/(q - 1/q), principal branch
    bool tl_mode = false; // lambda^2 = 1/q (Temperley-Lieb point)

    cplx qq() const { return q - 1.0 / q; } // q - q^{-1}
};

DeformParams derive_params(cplx q, cplx mu, int omega,
                           const ToleranceConfig& tol = {});

// ---- check reporting ----------------------------------------------------

struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool informative = false;  // never affects the overall flag
    std::string note;          // measured scalars, ratios, skip reasons
};

using RelationReport = std::vector<CheckReport>;

inline CheckReport make_check(std::string name, double residual, double tol,
                              std::string note = {}) {
    CheckReport c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tol;
    c.pass = residual <= tol;
    c.note = std::move(note);
    return c;
}

inline CheckReport make_info(std::string name, double value, std::string note = {}) {
    CheckReport c;
    c.name = std::move(name);
    c.residual = value;
    c.tolerance = 0.0;
    c.pass = true;
    c.informative = true;
    c.note = std::move(note);
    return c;
}

} // namespace qsl21
