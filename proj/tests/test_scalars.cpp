#include "doctest.h"

#include "qsl21/linalg.hpp"
#include "qsl21/uqsl21.hpp"

using namespace qsl21;

TEST_CASE("qbracket basics") {
    DeformParams p = derive_params(2.0, 0.77, +1);
    CHECK(std::abs(qbracket(0.0, p)) < 1e-15);
    CHECK(std::abs(qbracket(1.0, p) - 1.0) < 1e-15);
    CHECK(std::abs(qbracket(2.0, p) - 2.5) < 1e-14); // (4 - 1/4)/(2 - 1/2)
}

TEST_CASE("qbracket antisymmetry and recursion") {
    DeformParams p = derive_params(cplx(0.7, 0.2), cplx(-0.45, 0.0), -1);
    for (double n : {0.3, 1.7, -2.2}) {
        CHECK(std::abs(qbracket(-n, p) + qbracket(n, p)) < 1e-13);
        cplx lhs = qbracket(n + 1.0, p) + qbracket(n - 1.0, p);
        cplx rhs = (p.q + 1.0 / p.q) * qbracket(n, p);
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("derive_params populates lambda, x, y") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    CHECK(std::abs(p.lambda - 1.056220) < 1e-5);
    CHECK(std::abs(p.x - 0.052370) < 1e-5);
    CHECK(std::abs(p.y * p.y - qbracket(p.mu, p) * qbracket(p.mu + 1.0, p)) < 1e-14);
    CHECK(!p.tl_mode);

    // determinism
    DeformParams p2 = derive_params(1.2, 0.3, +1);
    CHECK(p.lambda == p2.lambda);
    CHECK(p.x == p2.x);
    CHECK(p.y == p2.y);
}

TEST_CASE("bracket ratios used by the braid formulas") {
    DeformParams p = derive_params(cplx(0.7, 0.2), 0.3, +1);
    cplx r0 = qbracket(2.0 * p.mu, p) / qbracket(p.mu, p);
    CHECK(std::abs(r0 - (p.lambda + 1.0 / p.lambda)) < 1e-13);
    cplx r2 = qbracket(2.0 * p.mu + 2.0, p) / qbracket(p.mu + 1.0, p);
    CHECK(std::abs(r2 - (p.q * p.lambda + 1.0 / (p.q * p.lambda))) < 1e-13);
}

TEST_CASE("tl point is detected and snapped") {
    DeformParams p = derive_params(1.4, -0.5, +1);
    CHECK(p.tl_mode);
    CHECK(std::abs(p.lambda * p.lambda - 1.0 / p.q) < 1e-14);
    CHECK(std::abs(qbracket(2.0 * p.mu + 1.0, p)) < 1e-14);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(derive_params(1.0, 0.3, +1), DegenerateQ);
    CHECK_THROWS_AS(derive_params(1.2, 0.0, +1), DegenerateRepresentation); // [2mu] = 0
    ToleranceConfig bad;
    bad.identity_tol = -1.0;
    CHECK_THROWS_AS(derive_params(1.2, 0.3, +1, bad), Error);
}

TEST_CASE("cartan_qbracket on k-products") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    Mat k = eye(4);
    Mat one = cartan_qbracket(k, 1, p);
    CHECK(rel_residual(one, eye(4)) < 1e-15); // [1] = 1

    Mat zero = Mat::Zero(4, 4);
    CHECK_THROWS_AS(cartan_qbracket(zero, 0, p), SingularCartan);
}

TEST_CASE("cartan_qbracket reads the weight structure off the k matrices") {
    for (int om : {+1, -1}) {
        DeformParams p = derive_params(1.2, 0.3, om);
        GeneratorSet g = build_rep(p);
        // k2 has h2-weights (mu, mu, mu+1, mu+1)
        Mat b2 = cartan_qbracket(g.k2, 0, p);
        Mat expect2 = Eigen::Vector4cd(qbracket(p.mu, p), qbracket(p.mu, p),
                                       qbracket(p.mu + 1.0, p), qbracket(p.mu + 1.0, p))
                          .asDiagonal();
        CHECK(rel_residual(b2, expect2) < 1e-14);
        // k1 k2 with shift 1: [h1+h2+1] up to the omega sign carried by k1;
        // the k-product evaluation keeps that sign exact (no matrix log)
        Mat b12 = cartan_qbracket(Mat(g.k1 * g.k2), 1, p);
        Mat expect12 = double(om)
                     * Eigen::Vector4cd(qbracket(p.mu + 1.0, p), qbracket(p.mu + 2.0, p),
                                        qbracket(p.mu + 1.0, p), qbracket(p.mu + 2.0, p))
                           .asDiagonal();
        CHECK(rel_residual(b12, expect12) < 1e-14);
    }
}
