// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "qsl21/suites.hpp"
#include "qsl21/linalg.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

using namespace qsl21;

namespace {

int failures = 0;

double now_s() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void line(int idx, const char* what, bool pass, double value, double bound,
          const char* extra = "") {
    if (!pass) ++failures;
    std::printf("%s  criterion %2d: %-58s  value=%.3e bound=%.1e %s\n",
                pass ? "PASS" : "FAIL", idx, what, value, bound, extra);
}

const std::vector<std::tuple<cplx, cplx, int>> grid() {
    std::vector<std::tuple<cplx, cplx, int>> g;
    for (cplx q : {cplx(1.2, 0.0), cplx(0.7, 0.2)})
        for (cplx mu : {cplx(0.3, 0.0), cplx(-0.45, 0.0)})
            for (int om : {+1, -1}) g.emplace_back(q, mu, om);
    return g;
}

double worst(const RelationReport& r, bool informative_too = false) {
    double w = 0;
    for (const auto& c : r)
        if (informative_too || !c.informative) w = std::max(w, c.residual);
    return w;
}

void criterion_1() {
    double t0 = now_s();
    double w = 0;
    for (const auto& [q, mu, om] : grid()) {
        DeformParams p = derive_params(q, mu, om);
        GeneratorSet g = build_rep(p);
        w = std::max(w, worst(check_defining_relations(g, p, {})));
    }
    double dt = now_s() - t0;
    line(1, "defining relations over the 8-point grid <= 1e-10", w <= 1e-10, w, 1e-10);
    line(1, "defining-relation suite runtime < 1 s", dt < 1.0, dt, 1.0, "(seconds)");
}

void criterion_2() {
    double w = 0, woff = 0;
    for (const auto& [q, mu, om] : grid()) {
        DeformParams p = derive_params(q, mu, om);
        GeneratorSet g = build_rep(p);
        RelationReport r = check_casimir_relations(g, p, -1, 3, {});
        for (const auto& c : r) {
            if (c.name.find("Schur") != std::string::npos)
                woff = std::max(woff, c.residual);
            else
                w = std::max(w, c.residual);
        }
    }
    line(2, "casimir/scasimir relations, p in {-1..3} <= 1e-10", w <= 1e-10, w, 1e-10);
    line(2, "Schur scalarity of C_p on rho <= 1e-11", woff <= 1e-11, woff, 1e-11);
}

void criterion_3() {
    double w = 0;
    bool ranks_ok = true;
    for (const auto& [q, mu, om] : grid()) {
        DeformParams p = derive_params(q, mu, om);
        GeneratorSet g = build_rep(p);
        ProjectorTriple t = projectors_from_casimirs(g, p, 0);
        const Mat zero = Mat::Zero(16, 16);
        w = std::max({w, rel_residual(t.o0 * t.o0, t.o0), rel_residual(t.o1 * t.o1, t.o1),
                      rel_residual(t.o2 * t.o2, t.o2), rel_residual(t.o0 * t.o1, zero),
                      rel_residual(t.o0 * t.o2, zero), rel_residual(t.o1 * t.o2, zero),
                      rel_residual(t.o0 + t.o1 + t.o2, eye(16))});
        ToleranceConfig tol;
        ranks_ok = ranks_ok && projector_rank(t.o0, tol) == 4 &&
                   projector_rank(t.o1, tol) == 8 && projector_rank(t.o2, tol) == 4;
        w = std::max(w, worst(check_decomposition(g, p, -1, 2, t, {})));
        BraidPair pair = braid_pair(g, p);
        ProjectorTriple tb = projectors_from_braid(pair, p);
        w = std::max({w, rel_residual(t.o0, tb.o0), rel_residual(t.o1, tb.o1),
                      rel_residual(t.o2, tb.o2)});
    }
    line(3, "projector algebra + decomposition cross-identities <= 1e-10", w <= 1e-10, w,
         1e-10);
    line(3, "projector ranks exactly (4, 8, 4)", ranks_ok, ranks_ok ? 0.0 : 1.0, 0.0);
}

void criterion_4() {
    double w_explicit = 0, w_alg = 0, w_eig = 0, bwm_min = 1e9;
    for (const auto& [q, mu, om] : grid()) {
        DeformParams p = derive_params(q, mu, om);
        GeneratorSet g = build_rep(p);
        BraidPair ex = braid_pair_explicit(p);
        ProjectorTriple t = projectors_from_casimirs(g, p, 0);
        const cplx r0 = qbracket(2.0 * p.mu, p) / qbracket(p.mu, p);
        const cplx r2 = qbracket(2.0 * p.mu + 2.0, p) / qbracket(p.mu + 1.0, p);
        Mat bp = -p.q * eye(16) + p.q * p.lambda * r0 * t.o0 + (1.0 / p.lambda) * r2 * t.o2;
        Mat bpi = -(1.0 / p.q) * eye(16) + 1.0 / (p.q * p.lambda) * r0 * t.o0
                + p.lambda * r2 * t.o2;
        w_explicit = std::max({w_explicit, rel_residual(bp, ex.b), rel_residual(bpi, ex.binv)});
        w_alg = std::max(w_alg, worst(check_cubic_algebra(ex, p, {})));
        auto ev = eigenvalues_sorted(ex.b);
        std::vector<cplx> expect;
        for (int i = 0; i < 8; ++i) expect.push_back(-p.q);
        for (int i = 0; i < 4; ++i) expect.push_back(p.q * p.lambda * p.lambda);
        for (int i = 0; i < 4; ++i) expect.push_back(1.0 / (p.q * p.lambda * p.lambda));
        w_eig = std::max(w_eig, match_spectra(ev, expect));
        for (const auto& c : bwm_failure_probe(ex, g, p, {}))
            if (c.name.find("must fail") != std::string::npos)
                bwm_min = std::min(bwm_min, c.residual);
    }
    line(4, "explicit braid equals projector-built braid <= 1e-10", w_explicit <= 1e-10,
         w_explicit, 1e-10);
    line(4, "cubic + braid + supplementary relations <= 1e-10", w_alg <= 1e-10, w_alg, 1e-10);
    line(4, "braid eigenvalues {-q x8, q lam^2 x4, inv x4} <= 1e-9", w_eig <= 1e-9, w_eig,
         1e-9);
    line(4, "BWM quotient relations fail: post-fit residual > 1e-3", bwm_min > 1e-3, bwm_min,
         1e-3, "(lower bound)");
}

void criterion_5() {
    double t0 = now_s();
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    CrossingData cd = make_crossing_data(p);
    double w_ybe = 0, w_inv = 0, w_pt = 0, w_cross = 0, z0 = 0;
    for (const auto& c : ybe_check(pair, p, {}, 20))
        if (c.name.find("Yang-Baxter") != std::string::npos) w_ybe = c.residual;
    for (const auto& c : inversion_check(pair, p, {}, 10)) {
        if (c.name.find("inversion") != std::string::npos) w_inv = c.residual;
        if (c.name.find("zeta(0)") != std::string::npos) z0 = c.residual;
    }
    w_pt = pt_check(pair, p, {}, 10).front().residual;
    w_cross = crossing_check(pair, p, cd, {}, 10).front().residual;
    double dt = now_s() - t0;
    line(5, "YBE over 20 seeded (u,v) <= 1e-9", w_ybe <= 1e-9, w_ybe, 1e-9);
    line(5, "inversion with derived zeta <= 1e-9", w_inv <= 1e-9, w_inv, 1e-9);
    line(5, "zeta(0) = 1 to 1e-12", z0 <= 1e-12, z0, 1e-12);
    line(5, "PT symmetry <= 1e-10", w_pt <= 1e-10, w_pt, 1e-10);
    line(5, "crossing scalarity <= 1e-9 (xi comparison informative)", w_cross <= 1e-9,
         w_cross, 1e-9);
    line(5, "spectral suite runtime < 10 s", dt < 10.0, dt, 10.0, "(seconds)");
}

void criterion_6() {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    CrossingData cd = make_crossing_data(p);
    double w_re = 0, w_k0 = 0;
    for (KFamily fam : {KFamily::trivial, KFamily::a, KFamily::b})
        for (cplx c : std::vector<cplx>{0.5, cplx(-2.3, 0.4)}) {
            if (fam == KFamily::trivial && c != cplx(0.5, 0.0)) continue;
            cplx cc = fam == KFamily::trivial ? cplx(0.0) : c;
            for (const auto& cr :
                 reflection_residual_minus({KSide::minus, fam, cc}, pair, p, {}, 20)) {
                if (cr.name.find("reflection") != std::string::npos)
                    w_re = std::max(w_re, cr.residual);
                else
                    w_k0 = std::max(w_k0, cr.residual);
            }
            for (const auto& cr :
                 reflection_residual_plus({KSide::plus, fam, cc}, pair, p, cd, {}, 20)) {
                if (cr.name.find("reflection") != std::string::npos)
                    w_re = std::max(w_re, cr.residual);
                else
                    w_k0 = std::max(w_k0, cr.residual);
            }
        }
    line(6, "RE- and RE+ over families x C x 20 samples <= 1e-9", w_re <= 1e-9, w_re, 1e-9);
    line(6, "K-(0) = Id and tr K+(0) = 0 to 1e-12", w_k0 <= 1e-12, w_k0, 1e-12);
}

void criterion_7() {
    double t0 = now_s();
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    CrossingData cd = make_crossing_data(p);
    const int L = 3;
    auto us = seeded_samples(7, 5);
    double w_per = 0;
    ChainOperator hp = h_periodic(L, pair, p);
    for (const cplx& u : us)
        w_per = std::max(w_per,
                         comm_norm(hp.mat, monodromy_and_transfer(u, L, pair, p).second));
    line(7, "[H_per, closed transfer] at 5 seeded u <= 1e-8", w_per <= 1e-8, w_per, 1e-8);

    double w_open = 0;
    struct FamC { KFamily fam; cplx c; };
    const std::vector<FamC> fams = {{KFamily::trivial, 0.0},
                                    {KFamily::a, 0.5},
                                    {KFamily::b, cplx(-2.3, 0.4)}};
    for (const auto& fm : fams)
        for (const auto& fp : fams) {
            ChainSpec spec{L, ChainModel::dist, fm.fam, fm.c, fp.fam, fp.c};
            ChainOperator ho = h_open(spec, p);
            for (const cplx& u : us)
                w_open = std::max(
                    w_open, comm_norm(ho.mat, double_row_transfer(u, spec, pair, p, cd)));
        }
    double dt = now_s() - t0;
    line(7, "[H_open, t(u)] for 9 boundary combinations <= 1e-8", w_open <= 1e-8, w_open,
         1e-8);
    line(7, "chain suite runtime < 60 s", dt < 60.0, dt, 60.0, "(seconds)");
}

void criterion_8() {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    RelationReport r = invariance_check(4, pair, p, {});
    double w_inv = 0, w_per = 0;
    for (const auto& c : r) {
        if (c.name.find("H_per") != std::string::npos)
            w_per = c.residual;
        else
            w_inv = std::max(w_inv, c.residual);
    }
    line(8, "[H_open trivial, Delta^4(g)] for all six generators <= 1e-9", w_inv <= 1e-9,
         w_inv, 1e-9);
    line(8, "periodic chain violates invariance: commutator > 1e-3", w_per > 1e-3, w_per,
         1e-3, "(lower bound)");
}

void criterion_9() {
    DeformParams p = derive_params(1.2, 0.3, +1);
    double w_diff = 0;
    for (int L : {2, 3, 4}) w_diff = std::max(w_diff, worst(hdiff_check(L, p, {})));
    line(9, "H_ferm - H_dist telescoping identity (L=2,3,4) <= 1e-12", w_diff <= 1e-12,
         w_diff, 1e-12);
    CheckReport c = special_boundary_equality(3, p, {});
    line(9, "H_dist + B1^b + BL^b at the special C equals H_ferm <= 1e-10",
         c.residual <= 1e-10, c.residual, 1e-10);
}

void criterion_10() {
    DeformParams p = derive_params(1.2, 0.3, +1);
    RelationReport r = twist_equivalence_check(4, p, {});
    double w = worst(r);
    line(10, "dist/ferm open-chain spectra match (L=2,3,4) <= 1e-8", w <= 1e-8, w, 1e-8);
    double t0 = now_s();
    ChainSpec spec{4, ChainModel::dist, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
    spectrum(h_open(spec, p), {});
    double dt = now_s() - t0;
    line(10, "L=4 diagonalization (256x256) < 5 s", dt < 5.0, dt, 5.0, "(seconds)");
}

void criterion_11() {
    DeformParams p = derive_params(1.2, 0.3, +1);
    GeneratorSet g = build_rep(p);
    BraidPair pair = braid_pair(g, p);
    CrossingData cd = make_crossing_data(p);
    ChainSpec spec{2, ChainModel::dist, KFamily::b, 0.5, KFamily::b, 0.5};
    RelationReport r = derivative_construction_check(spec, pair, p, cd, {});
    double w_fd = 0, w_rescale = 0;
    for (const auto& c : r) {
        if (c.name.find("rescale") != std::string::npos)
            w_rescale = c.residual;
        else if (c.name.find("normalized d2t") != std::string::npos)
            w_fd = c.residual;
    }
    line(11, "normalized d2t/du2 matches h_open/x mod identity <= 1e-5", w_fd <= 1e-5, w_fd,
         1e-5);
    line(11, "K rescaling shifts only the identity part <= 1e-5", w_rescale <= 1e-5,
         w_rescale, 1e-5);
}

void criterion_12() {
    DeformParams p = derive_params(1.4, -0.5, +1);
    RelationReport r = tl_suite(3, p, {});
    double w_tl = 0;
    double alpha = 0;
    bool alpha_nonzero = false;
    for (const auto& c : r) {
        if (c.informative) continue;
        if (c.name.find("alpha nonzero") != std::string::npos) {
            alpha = c.residual;
            alpha_nonzero = c.pass;
            continue;
        }
        w_tl = std::max(w_tl, c.residual);
    }
    line(12, "Temperley-Lieb relations at q=1.4, L=3 <= 1e-10", w_tl <= 1e-10, w_tl, 1e-10);
    char extra[96];
    std::snprintf(extra, sizeof extra, "(measured alpha = %.6f, expected 2(q+1/q) = %.6f)",
                  alpha, 2.0 * (1.4 + 1.0 / 1.4));
    line(12, "parity-hermitized generator has nonzero square", alpha_nonzero, alpha, 0.0,
         extra);
}

void overall_runtime() {
    double t0 = now_s();
    RunConfig cfg;
    cfg.suite = "all";
    Report rep = run_suite(cfg);
    double dt = now_s() - t0;
    line(13, "full verify --suite all wall time < 2 min", dt < 120.0 && rep.overall_pass, dt,
         120.0, rep.overall_pass ? "(seconds, suite passed)" : "(seconds, SUITE FAILED)");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    overall_runtime();
    std::printf("%s: %d failing acceptance line(s)\n", failures == 0 ? "SUCCESS" : "FAILURE",
                failures);
    return failures == 0 ? 0 : 1;
}
