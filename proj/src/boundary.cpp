#include "qsl21/boundary.hpp"
#include "qsl21/linalg.hpp"

#include <cmath>

namespace qsl21 {

namespace {

void check_pole(KFamily family, cplx c, const DeformParams& p) {
    const double eps = 1e-12;
    if (family == KFamily::a &&
        (std::abs(1.0 + c) < eps || std::abs(1.0 + p.q * p.q * c) < eps))
        throw PoleAtC("family-a parameter sits on a pole");
    if (family == KFamily::b && std::abs(1.0 + c) < eps)
        throw PoleAtC("family-b parameter sits on a pole");
}

const Mat kNUp = elem4(1, 1) + elem4(3, 3);
const Mat kNDn = elem4(1, 1) + elem4(2, 2);

} // namespace

Mat k_minus(const KMatrixSpec& spec, cplx u, const DeformParams& p) {
    if (spec.side != KSide::minus) throw Error("k_minus expects a minus-side spec");
    const cplx q = p.q, c = spec.c, eu = std::exp(u), emu = std::exp(-u);
    switch (spec.family) {
    case KFamily::trivial:
        return eye(4);
    case KFamily::a: {
        check_pole(spec.family, c, p);
        const cplx n = (1.0 + c) * (1.0 + q * q * c);
        return Eigen::Vector4cd((emu + c) * (emu + q * q * c),
                                (eu + c) * (emu + q * q * c),
                                (eu + c) * (emu + q * q * c),
                                (eu + c) * (eu + q * q * c)).asDiagonal() * (1.0 / n);
    }
    case KFamily::b: {
        check_pole(spec.family, c, p);
        return Eigen::Vector4cd(emu + c, emu + c, eu + c, eu + c).asDiagonal()
             * (1.0 / (1.0 + c));
    }
    }
    throw Error("unreachable");
}

Mat k_plus(const KMatrixSpec& spec, cplx u, const DeformParams& p, const CrossingData& cd) {
    if (spec.side != KSide::plus) throw Error("k_plus expects a plus-side spec");
    if (spec.family == KFamily::trivial) return cd.m;
    KMatrixSpec minus = spec;
    minus.side = KSide::minus;
    Mat km = k_minus(minus, -u - cd.rho_shift, p);
    return km.transpose() * cd.m;
}

RelationReport reflection_residual_minus(const KMatrixSpec& spec, const BraidPair& pair,
                                         const DeformParams& p, const ToleranceConfig& tol,
                                         int samples) {
    RelationReport rep;
    const Mat pp = perm_p();
    auto r12 = [&](cplx w) { return rmat(w, pair, p); };
    auto r21 = [&](cplx w) { return Mat(rcheck(w, pair, p) * pp); };
    auto us = seeded_samples(tol.seed + 4, 2 * samples);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        const cplx u = us[size_t(2 * i)], v = us[size_t(2 * i + 1)];
        const Mat k1u = kron(k_minus(spec, u, p), eye(4));
        const Mat k2v = kron(eye(4), k_minus(spec, v, p));
        Mat lhs = r12(u - v) * k1u * r21(u + v) * k2v;
        Mat rhs = k2v * r12(u + v) * k1u * r21(u - v);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    rep.push_back(make_check("reflection equation (minus)", worst, 1e-9));
    rep.push_back(make_check("K^-(0) = Id", rel_residual(k_minus(spec, 0.0, p), eye(4)), 1e-12));
    return rep;
}

RelationReport reflection_residual_plus(const KMatrixSpec& spec, const BraidPair& pair,
                                        const DeformParams& p, const CrossingData& cd,
                                        const ToleranceConfig& tol, int samples) {
    RelationReport rep;
    const Mat pp = perm_p();
    const Mat m1 = kron(cd.m, eye(4));
    const Mat m1i = m1.inverse();
    const cplx rho = cd.rho_shift;
    auto r12 = [&](cplx w) { return rmat(w, pair, p); };
    auto r21 = [&](cplx w) { return Mat(rcheck(w, pair, p) * pp); };
    auto us = seeded_samples(tol.seed + 5, 2 * samples);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        const cplx u = us[size_t(2 * i)], v = us[size_t(2 * i + 1)];
        const Mat k1 = partial_transpose(kron(k_plus(spec, u, p, cd), eye(4)), 0);
        const Mat k2 = partial_transpose(kron(eye(4), k_plus(spec, v, p, cd)), 1);
        Mat lhs = r12(-u + v) * k1 * m1i * r21(-u - v - 2.0 * rho) * m1 * k2;
        Mat rhs = k2 * m1 * r12(-u - v - 2.0 * rho) * m1i * k1 * r21(-u + v);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    rep.push_back(make_check("reflection equation (plus)", worst, 1e-9));
    rep.push_back(make_check("tr K^+(0) = 0", std::abs(k_plus(spec, 0.0, p, cd).trace()), 1e-12));
    return rep;
}

Mat boundary_term_b1(KFamily family, cplx c, const DeformParams& p) {
    const cplx q = p.q;
    switch (family) {
    case KFamily::trivial:
        return Mat::Zero(4, 4);
    case KFamily::a: {
        check_pole(family, c, p);
        const cplx n = (1.0 + c) * (1.0 + q * q * c);
        return -((q * q - 1.0) * c * kNUp * kNDn + (1.0 + c) * (kNUp + kNDn)) / n;
    }
    case KFamily::b:
        check_pole(family, c, p);
        return -kNDn / (1.0 + c);
    }
    throw Error("unreachable");
}

Mat boundary_term_bl(KFamily family, cplx cp, const DeformParams& p) {
    const cplx q = p.q;
    switch (family) {
    case KFamily::trivial:
        return Mat::Zero(4, 4);
    case KFamily::a: {
        check_pole(family, cp, p);
        const cplx n = (1.0 + cp) * (1.0 + q * q * cp);
        return ((1.0 - q * q) * cp * kNUp * kNDn + (1.0 + q * q * cp) * (kNUp + kNDn)) / n;
    }
    case KFamily::b:
        check_pole(family, cp, p);
        return kNDn / (1.0 + cp);
    }
    throw Error("unreachable");
}

} // namespace qsl21
