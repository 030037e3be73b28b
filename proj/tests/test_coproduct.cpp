#include "doctest.h"

#include "qsl21/coproduct.hpp"
#include "qsl21/linalg.hpp"

using namespace qsl21;

TEST_CASE("ng_kron sign rule") {
    // even-column (x) anything is a plain kron; odd-column picks the parity of
    // the right factor
    Mat a = elem4(1, 2); // column state 2 is odd
    Mat b = elem4(2, 1); // odd -> even: odd operator
    Mat plain = kron(a, b);
    CHECK(rel_residual(ng_kron(a, b), Mat(-plain)) < 1e-15);
    Mat c = elem4(1, 4); // even -> even
    CHECK(rel_residual(ng_kron(a, c), kron(a, c)) < 1e-15);
    Mat d = elem4(1, 1);
    CHECK(rel_residual(ng_kron(d, b), kron(d, b)) < 1e-15);
}

TEST_CASE("coproduct images satisfy the relations with plain products") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    AlgebraImages two = coproduct_images2(g, p);

    // group-like and anticommutator examples
    CHECK(rel_residual(two.k1, ng_kron(g.k1, g.k1)) < 1e-14);
    Mat lhs = two.e2 * two.f2 + two.f2 * two.e2;
    Mat rhs = (two.k2 - Mat(two.k2.inverse())) / (p.q - 1.0 / p.q);
    CHECK(rel_residual(lhs, rhs) < 1e-12);

    // coproduct_l reduces to the representation at L=1 and to Delta at L=2
    CHECK(rel_residual(coproduct_l("e2", 1, g, p).mat, g.e2) < 1e-15);
    CHECK(rel_residual(coproduct_l("e2", 2, g, p).mat, two.e2) < 1e-14);
    CHECK(rel_residual(coproduct_l("k1", 3, g, p).mat,
                       kron(kron(g.k1, g.k1), g.k1)) < 1e-14);
}

TEST_CASE("coassociativity with grouped sign rules") {
    for (int om : {+1, -1}) {
        DeformParams p = derive_params(cplx(0.7, 0.2), -0.45, om);
        GeneratorSet g = build_rep(p);
        CHECK(coassociativity_residual(g, p) < 1e-12);
    }
}

TEST_CASE("coproduct of central words stays central") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    AlgebraImages two = coproduct_images2(g, p);
    Mat dc = coproduct_element({"C1"}, two, p);
    for (const Mat* m : {&two.e1, &two.e2, &two.f1, &two.f2})
        CHECK(comm_norm(dc, *m) < 1e-11);
    CHECK(rel_residual(coproduct_element({"id"}, two, p), eye(16)) < 1e-15);
    Mat prod = coproduct_element({"Q+1"}, two, p) * coproduct_element({"Q-2"}, two, p);
    CHECK(prod.norm() < 1e-11);
    CHECK_THROWS_AS(coproduct_element({"bogus"}, two, p), UnknownToken);
    // Cartan-bracket tokens act on the coproduct k-images
    Mat br = coproduct_element({"[h1+h2+1]", "[h2]"}, two, p);
    Mat expect = cartan_qbracket(Mat(two.k1 * two.k2), 1, p) * cartan_qbracket(two.k2, 0, p);
    CHECK(rel_residual(br, expect) < 1e-14);
}

TEST_CASE("embed placement and errors") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    CHECK(rel_residual(embed(eye(4), 2, 3).mat, eye(64)) < 1e-15);
    Mat a = ng_kron(g.e2, g.f2), b = ng_kron(g.f2, g.e2);
    CHECK(rel_residual(embed(a, 1, 2).mat * embed(b, 1, 2).mat, embed(Mat(a * b), 1, 2).mat)
          < 1e-14);
    CHECK_THROWS_AS(embed(g.e1, 0, 3), SiteOutOfRange);
    CHECK_THROWS_AS(embed(a, 3, 3), SiteOutOfRange);
    CHECK_THROWS_AS(embed(g.e1, 1, 9), SizeLimit);
}

TEST_CASE("fermionic-basis coproduct images satisfy the fermionic relations") {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet fb = fermionic_basis(build_rep(p), p);
    AlgebraImages two = coproduct_images2(fb, p);
    Mat lhs = two.e1 * two.f1 + two.f1 * two.e1;
    Mat rhs = (two.k1 - Mat(two.k1.inverse())) / (p.q - 1.0 / p.q);
    CHECK(rel_residual(lhs, rhs) < 1e-12);
    CHECK((two.e2 * two.e2).norm() < 1e-12);
    // iterated images use the odd ladder form for both pairs
    AlgebraImages three = coproduct_images(fb, p, 3);
    Mat l3 = three.e1 * three.f1 + three.f1 * three.e1;
    Mat r3 = (three.k1 - Mat(three.k1.inverse())) / (p.q - 1.0 / p.q);
    CHECK(rel_residual(l3, r3) < 1e-12);
}
