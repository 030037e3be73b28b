#include "doctest.h"

#include "qsl21/braid.hpp"
#include "qsl21/linalg.hpp"

#include <random>

using namespace qsl21;

namespace {
const std::vector<std::tuple<cplx, cplx, int>> kGrid = {
    {1.2, 0.3, +1}, {1.2, 0.3, -1},
    {cplx(0.7, 0.2), -0.45, +1}, {cplx(0.7, 0.2), -0.45, -1},
    {1.2, -0.45, -1},
};
}

TEST_CASE("projectors: idempotent, orthogonal, complete, ranked (4,8,4)") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    ProjectorTriple t = projectors_from_casimirs(g, p, 0);
    CHECK(rel_residual(t.o0 * t.o0, t.o0) < 1e-12);
    CHECK(rel_residual(t.o1 * t.o1, t.o1) < 1e-12);
    CHECK(rel_residual(t.o2 * t.o2, t.o2) < 1e-12);
    CHECK((t.o0 * t.o1).norm() < 1e-12);
    CHECK((t.o1 * t.o2).norm() < 1e-12);
    CHECK(rel_residual(t.o0 + t.o1 + t.o2, eye(16)) < 1e-12);
    ToleranceConfig tol;
    CHECK(projector_rank(t.o0, tol) == 4);
    CHECK(projector_rank(t.o1, tol) == 8);
    CHECK(projector_rank(t.o2, tol) == 4);

    ProjectorTriple t1 = projectors_from_casimirs(g, p, 1);
    CHECK(rel_residual(t.o0, t1.o0) < 1e-10);
    CHECK(rel_residual(t.o1, t1.o1) < 1e-10);
    CHECK(rel_residual(t.o2, t1.o2) < 1e-10);

    // TL point degenerates
    DeformParams ptl = derive_params(1.4, -0.5, +1);
    GeneratorSet gtl = build_rep(ptl);
    CHECK_THROWS_AS(projectors_from_casimirs(gtl, ptl, 0), DegenerateRepresentation);
}

TEST_CASE("decomposition of Delta(C_p) over the projectors") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    ProjectorTriple t = projectors_from_casimirs(g, p, 0);
    for (const auto& c : check_decomposition(g, p, -1, 2, t, {})) {
        INFO(c.name);
        CHECK(c.residual < 1e-10);
    }
}

TEST_CASE("braid pair: explicit entries equal the projector route") {
    for (const auto& [q, mu, om] : kGrid) {
        DeformParams p = derive_params(q, mu, om);
        GeneratorSet g = build_rep(p);
        BraidPair pair = braid_pair(g, p); // throws FormulaMismatch on any disagreement
        CHECK(rel_residual(pair.b * pair.binv, eye(16)) < 1e-12);
    }
}

TEST_CASE("explicit braid entries") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    BraidPair pair = braid_pair_explicit(p);
    const cplx q = p.q, lam = p.lambda;
    CHECK(std::abs(pair.b(0, 0) - q * lam * lam) < 1e-15);           // E11 x E11
    CHECK(std::abs(pair.b(3, 3) - p.x) < 1e-15);                     // E11 x E44
    CHECK(std::abs(pair.b(15, 15) - 1.0 / (q * lam * lam)) < 1e-15); // E44 x E44
    // cross entry (1,4)<-(2,3) is q^{-1/2} sqrt(x)
    cplx sx = p.y * (q - 1.0 / q);
    CHECK(std::abs(pair.b(3, 6) - sx / std::sqrt(q)) < 1e-15);
}

TEST_CASE("braid spectrum and the recovered projectors") {
    DeformParams p = derive_params(cplx(0.7, 0.2), -0.45, -1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    ProjectorTriple t = projectors_from_casimirs(g, p, 0);
    const cplx q = p.q, l2 = p.lambda * p.lambda;
    CHECK(rel_residual(pair.b * t.o0, Mat(q * l2 * t.o0)) < 1e-12);
    CHECK(rel_residual(pair.b * t.o1, Mat(-q * t.o1)) < 1e-12);
    CHECK(rel_residual(pair.b * t.o2, Mat(t.o2 / (q * l2))) < 1e-12);
    ProjectorTriple tb = projectors_from_braid(pair, p);
    CHECK(rel_residual(t.o0, tb.o0) < 1e-10);
    CHECK(rel_residual(t.o1, tb.o1) < 1e-10);
    CHECK(rel_residual(t.o2, tb.o2) < 1e-10);
}

TEST_CASE("cubic algebra and supplementary relation") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    for (const auto& c : check_cubic_algebra(pair, p, {})) {
        INFO(c.name);
        CHECK(c.pass);
        CHECK(c.residual < 1e-10);
    }
}

TEST_CASE("random parameter sweep: construction pipeline is self-consistent") {
    // property-style: seeded random points away from the degenerate locus
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> mag(0.6, 1.6), ang(-0.4, 0.4);
    int tried = 0;
    while (tried < 5) {
        cplx q = std::polar(mag(rng), ang(rng));
        cplx mu(mag(rng) - 0.5, ang(rng) * 0.5);
        int om = rng() % 2 ? +1 : -1;
        DeformParams p;
        try {
            p = derive_params(q, mu, om);
        } catch (const Error&) {
            continue; // too close to a degenerate point, resample
        }
        ++tried;
        INFO("q=", q.real(), "+", q.imag(), "i mu=", mu.real(), " om=", om);
        GeneratorSet g = build_rep(p);
        double w = 0;
        for (const auto& c : check_defining_relations(g, p, {}))
            w = std::max(w, c.residual);
        CHECK(w < 1e-11);
        BraidPair pair = braid_pair(g, p); // cross-route assertion inside
        Mat cub = (pair.b + p.q * eye(16)) * (pair.b - p.q * p.lambda * p.lambda * eye(16))
                * (pair.b - eye(16) / (p.q * p.lambda * p.lambda));
        CHECK(cub.norm() / pair.b.norm() < 1e-9);
    }
}

TEST_CASE("BWM quotient relations fail at generic parameters") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    RelationReport r = bwm_failure_probe(pair, g, p, {});
    int must_fail_entries = 0;
    for (const auto& c : r) {
        INFO(c.name);
        CHECK(c.pass);
        if (c.name.find("must fail") != std::string::npos) {
            ++must_fail_entries;
            CHECK(c.residual > 1e-3);
        }
    }
    CHECK(must_fail_entries == 4);
}
