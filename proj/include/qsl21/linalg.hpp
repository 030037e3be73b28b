#pragma once

#include "qsl21/types.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace qsl21 {

inline Mat eye(Eigen::Index n) { return Mat::Identity(n, n); }

inline Mat elem4(int i, int j) {
    Mat m = Mat::Zero(4, 4);
    m(i - 1, j - 1) = 1.0;
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// relative residual ||A - B||_F / max(1, ||A||_F, ||B||_F)
inline double rel_residual(const Mat& a, const Mat& b) {
    double na = a.norm(), nb = b.norm();
    return (a - b).norm() / std::max({1.0, na, nb});
}

inline double comm_norm(const Mat& a, const Mat& b) {
    return rel_residual(a * b, b * a);
}

/// least-squares scalar fit: argmin_s ||Y - s X||_F
inline cplx scalar_fit(const Mat& x, const Mat& y) {
    cplx num = (x.adjoint() * y).trace();
    cplx den = (x.adjoint() * x).trace();
    return num / den;
}

/// trace(M)/dim, the scalar part of a (near-)scalar matrix
inline cplx scalar_part(const Mat& m) { return m.trace() / cplx(double(m.rows()), 0.0); }

/// residual of M against the nearest scalar multiple of the identity
inline double off_scalar_residual(const Mat& m) {
    return rel_residual(m, scalar_part(m) * eye(m.rows()));
}

/// integer matrix power of an invertible diagonal-ish matrix (negative via inverse)
inline Mat ipow(const Mat& m, long n) {
    Mat base = n >= 0 ? m : Mat(m.inverse());
    long k = n >= 0 ? n : -n;
    Mat acc = eye(m.rows());
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

/// all eigenvalues, sorted by (Re, Im)
inline std::vector<cplx> eigenvalues_sorted(const Mat& m) {
    Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("eigensolver did not converge");
    std::vector<cplx> ev(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) ev[size_t(i)] = es.eigenvalues()(i);
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

/// greedy nearest matching of two spectra; returns the largest pair distance
inline double match_spectra(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const cplx& za : a) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(za - b[j]);
            if (d < best) { best = d; bi = j; }
        }
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

/// partial transpose on tensor leg 0 or 1 of a 16x16 two-leg operator
inline Mat partial_transpose(const Mat& m, int leg) {
    Mat out(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j)
                for (int l = 0; l < 4; ++l) {
                    if (leg == 0)
                        out(i * 4 + k, j * 4 + l) = m(j * 4 + k, i * 4 + l);
                    else
                        out(i * 4 + k, j * 4 + l) = m(i * 4 + l, j * 4 + k);
                }
    return out;
}

/// the permutation P: x (x) y -> y (x) x on C^4 (x) C^4
inline Mat perm_p() {
    Mat p = Mat::Zero(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p(j * 4 + i, i * 4 + j) = 1.0;
    return p;
}

} // namespace qsl21
