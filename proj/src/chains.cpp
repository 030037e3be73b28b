#include "qsl21/chains.hpp"
#include "qsl21/linalg.hpp"

#include <cmath>

namespace qsl21 {

FermionOps fermion_ops(const DeformParams&) {
    FermionOps f;
    f.c_up_dag = elem4(1, 2) + elem4(3, 4);
    f.c_up = elem4(2, 1) + elem4(4, 3);
    f.c_dn_dag = elem4(1, 3) + elem4(2, 4);
    f.c_dn = elem4(3, 1) + elem4(4, 2);
    f.n_up = f.c_up_dag * f.c_up;
    f.n_dn = f.c_dn_dag * f.c_dn;
    f.n = f.n_up + f.n_dn;
    f.s_plus = f.c_up_dag * f.c_dn;
    f.s_minus = f.c_dn_dag * f.c_up;
    f.parity = eye(4) - 2.0 * f.n_dn - 2.0 * f.n_up + 4.0 * f.n_up * f.n_dn;
    return f;
}

namespace {

// dist-model two-site density built from explicit one-site operators with
// sign freedoms (su on the up pair, sd on the down pair) and a y branch
Mat h_dist_from_fermions(const DeformParams& p, double su, double sd, double ybranch) {
    const cplx q = p.q, lam = p.lambda, om(double(p.omega), 0.0);
    const cplx y = ybranch * p.y;
    const cplx sq = std::sqrt(q);
    const cplx bmu = qbracket(p.mu, p), bmu1 = qbracket(p.mu + 1.0, p);
    const Mat id = eye(4), id16 = eye(16);

    Mat cUd = su * elem4(1, 2) + elem4(3, 4);
    Mat cU = su * elem4(2, 1) + elem4(4, 3);
    Mat cDd = elem4(1, 3) + sd * elem4(2, 4);
    Mat cD = elem4(3, 1) + sd * elem4(4, 2);
    Mat nU = cUd * cU, nD = cDd * cD;

    // pair hopping carries the omega of the representation (the number-operator
    // form with unit coefficient is the omega = +1 case)
    Mat pair = om * (kron(cD * cU, cUd * cDd) + kron(cUd * cDd, cD * cU));
    Mat up_braces = -bmu * id16 + (bmu + y / sq) * kron(nD, id) + (bmu - sq * y) * kron(id, nD)
                  + (-bmu + bmu1 + (sq - 1.0 / sq) * y) * kron(nD, nD);
    Mat up_hop = (kron(cU, cUd) + kron(cUd, cU)) * up_braces;
    Mat dn_braces = -bmu * id16 + (bmu - sq * y) * kron(nU, id) + (bmu + y / sq) * kron(id, nU)
                  + (-bmu + bmu1 + (sq - 1.0 / sq) * y) * kron(nU, nU);
    Mat dn_hop = om * (kron(cD, cDd) + kron(cDd, cD)) * dn_braces;
    Mat diag = kron(nU * nD, id) + kron(id, nU * nD)
             - qbracket(2.0 * p.mu + 1.0, p) * id16
             + lam * q * bmu * (kron(nU, id) + kron(nD, id))
             + (1.0 / (lam * q)) * bmu * (kron(id, nU) + kron(id, nD));
    // (q - q^{-1}) aligns the unit-pair-hopping normalization with b - b^{-1}
    return (q - 1.0 / q) * (pair + up_hop + dn_hop + diag);
}

} // namespace

void verify_fermion_convention(const DeformParams& p, const ToleranceConfig& tol) {
    const Mat target = braid_pair_explicit(p).b - braid_pair_explicit(p).binv;
    int matches = 0;
    for (double su : {1.0, -1.0})
        for (double sd : {1.0, -1.0})
            for (double yb : {1.0, -1.0})
                if (rel_residual(h_dist_from_fermions(p, su, sd, yb), target) <= tol.identity_tol)
                    ++matches;
    if (matches == 0)
        throw ConventionUnresolvable("no fermion sign assignment reproduces b - b^-1");
    // the all-plus assignment with the principal y branch is the frozen one
    if (rel_residual(h_dist_from_fermions(p, 1.0, 1.0, 1.0), target) > tol.identity_tol)
        throw ConventionUnresolvable("frozen fermion convention no longer matches b - b^-1");
}

Mat h_two_site(ChainModel model, const DeformParams& p) {
    if (model == ChainModel::tl) return h_tl(p);
    if (p.tl_mode)
        throw DegenerateRepresentation("dist/ferm densities need non-TL parameters");
    Mat h = h_dist_from_fermions(p, 1.0, 1.0, 1.0);
    if (model == ChainModel::ferm) {
        const FermionOps f = fermion_ops(p);
        h += p.x * (kron(eye(4), f.n_dn) - kron(f.n_dn, eye(4)));
    }
    return h;
}

CheckReport h_two_site_vs_braid(const BraidPair& pair, const DeformParams& p,
                                const ToleranceConfig& tol) {
    Mat h = h_two_site(ChainModel::dist, p);
    Mat d = h - (pair.b - pair.binv);
    cplx offset = scalar_part(d);
    CheckReport c = make_check("h_two_site(dist) = b - b^-1",
                               rel_residual(h, pair.b - pair.binv), tol.identity_tol);
    c.note = "additive identity coefficient " + std::to_string(offset.real()) + "+"
           + std::to_string(offset.imag()) + "i";
    return c;
}

ChainOperator h_open(const ChainSpec& spec, const DeformParams& p) {
    const int L = spec.sites;
    if (L < 2 || L > max_sites()) throw SizeLimit("open chain needs 2 <= L <= max");
    Mat h2 = h_two_site(spec.model, p);
    Mat h = Mat::Zero(1L << (2 * L), 1L << (2 * L));
    for (int i = 1; i < L; ++i) h += embed(h2, i, L).mat;
    if (spec.model != ChainModel::tl) {
        Mat b1 = boundary_term_b1(spec.fam_minus, spec.c_minus, p);
        Mat bl = boundary_term_bl(spec.fam_plus, spec.c_plus_prime, p);
        h += p.x * embed(b1, 1, L).mat;
        h += p.x * embed(bl, L, L).mat;
    }
    ChainOperator out;
    out.sites = L;
    out.mat = h;
    return out;
}

Mat shift_operator(int L) {
    const Eigen::Index dim = 1L << (2 * L);
    Mat u = Mat::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        // digits of s, site 1 most significant; shift right: (v1..vL) -> (vL, v1..v_{L-1})
        Eigen::Index last = s % 4;
        Eigen::Index rest = s / 4;
        Eigen::Index t = last * (dim / 4) + rest;
        u(t, s) = 1.0;
    }
    return u;
}

ChainOperator h_periodic(int L, const BraidPair& pair, const DeformParams& p) {
    if (L < 2 || L > max_sites()) throw SizeLimit("periodic chain needs 2 <= L <= max");
    const Mat h2 = pair.b - pair.binv;
    Mat h = Mat::Zero(1L << (2 * L), 1L << (2 * L));
    for (int i = 1; i < L; ++i) h += embed(h2, i, L).mat;
    const Mat u = shift_operator(L);
    h += u * embed(h2, L - 1, L).mat * u.inverse();
    ChainOperator out;
    out.sites = L;
    out.mat = h;
    return out;
}

Mat apply_two_leg(const Mat& op16, int leg_a, int leg_b, int legs) {
    const Eigen::Index dim = 1L << (2 * legs);
    Mat out = Mat::Zero(dim, dim);
    std::vector<Eigen::Index> weight(static_cast<size_t>(legs), 0);
    for (int k = 0; k < legs; ++k) weight[size_t(k)] = 1L << (2 * (legs - 1 - k));
    const Eigen::Index wa = weight[size_t(leg_a - 1)], wb = weight[size_t(leg_b - 1)];
    for (Eigen::Index s = 0; s < dim; ++s) {
        const Eigen::Index ja = (s / wa) % 4, jb = (s / wb) % 4;
        const Eigen::Index base = s - ja * wa - jb * wb;
        for (Eigen::Index ia = 0; ia < 4; ++ia)
            for (Eigen::Index ib = 0; ib < 4; ++ib) {
                const cplx amp = op16(ia * 4 + ib, ja * 4 + jb);
                if (amp == 0.0) continue;
                out(base + ia * wa + ib * wb, s) += amp;
            }
    }
    return out;
}

Mat ptrace_last(const Mat& m, int legs) {
    const Eigen::Index d = 1L << (2 * (legs - 1));
    Mat out = Mat::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            for (Eigen::Index a = 0; a < 4; ++a) out(i, j) += m(i * 4 + a, j * 4 + a);
    return out;
}

std::pair<Mat, Mat> monodromy_and_transfer(cplx u, int L, const BraidPair& pair,
                                           const DeformParams& p) {
    if (L < 1 || L + 1 > max_sites()) throw SizeLimit("monodromy needs 1 <= L <= max-1");
    const int legs = L + 1; // aux leg last
    const Mat r = rmat(u, pair, p);
    Mat t = eye(1L << (2 * legs));
    for (int i = L; i >= 1; --i) t = t * apply_two_leg(r, legs, i, legs);
    return {t, ptrace_last(t, legs)};
}

Mat double_row_transfer(cplx u, const ChainSpec& spec, const BraidPair& pair,
                        const DeformParams& p, const CrossingData& cd) {
    const int L = spec.sites;
    if (L < 1 || L + 1 > max_sites()) throw SizeLimit("double row needs 1 <= L <= max-1");
    const int legs = L + 1;
    const Eigen::Index dim = 1L << (2 * legs);
    const Mat rc = rcheck(u, pair, p);
    KMatrixSpec km{KSide::minus, spec.fam_minus, spec.c_minus};
    KMatrixSpec kp{KSide::plus, spec.fam_plus,
                   spec.fam_plus == KFamily::trivial ? cplx(0.0)
                                                     : p.q * p.lambda * p.lambda * spec.c_plus_prime};
    const Mat kp0 = kron(eye(dim / 4), k_plus(kp, u, p, cd));
    const Mat km1 = kron(k_minus(km, u, p), eye(dim / 4));

    Mat desc = apply_two_leg(rc, L, legs, legs); // Rc_{L0}
    for (int j = L - 1; j >= 1; --j) desc = desc * embed(rc, j, legs).mat;
    Mat asc = L >= 2 ? embed(rc, 1, legs).mat : Mat(eye(dim));
    for (int j = 2; j <= L - 1; ++j) asc = asc * embed(rc, j, legs).mat;
    asc = asc * apply_two_leg(rc, L, legs, legs);

    return ptrace_last(kp0 * desc * km1 * asc, legs);
}

RelationReport derivative_construction_check(const ChainSpec& spec, const BraidPair& pair,
                                             const DeformParams& p, const CrossingData& cd,
                                             const ToleranceConfig& tol) {
    RelationReport rep;
    const int L = spec.sites;
    const double h = 1e-4; // central differences
    const Eigen::Index dim = 1L << (2 * L);
    KMatrixSpec kp{KSide::plus, spec.fam_plus,
                   spec.fam_plus == KFamily::trivial ? cplx(0.0)
                                                     : p.q * p.lambda * p.lambda * spec.c_plus_prime};

    auto t_at = [&](cplx u) { return double_row_transfer(u, spec, pair, p, cd); };
    const Mat tp = t_at(h), t0 = t_at(0.0), tm = t_at(-h);
    const Mat dt = (tp - tm) / (2.0 * h);
    const Mat d2t = (tp - 2.0 * t0 + tm) / (h * h);

    // (1) first-derivative identity; tr K+(0) = 0 kills the bulk block, leaving
    // dt/du|0 = (d/du tr K+)|0 Id + 2 tr_0(K+(0) Rcheck'_{L0}(0))
    auto tr_kp = [&](cplx u) { return k_plus(kp, u, p, cd).trace(); };
    const cplx dtr = (tr_kp(h) - tr_kp(-h)) / (2.0 * h);
    const Mat hl0 = (pair.b - pair.binv) / p.x; // Rcheck'(0)
    const Mat kp_aux = kron(eye(4), k_plus(kp, 0.0, p, cd));
    const Mat site_l = ptrace_last(kp_aux * hl0, 2);
    Mat rhs = dtr * eye(dim) + 2.0 * embed(site_l, L, L).mat;
    rep.push_back(make_check("first t-derivative identity", rel_residual(dt, rhs), tol.fd_tol));

    // (2) normalizer d/du tr_0 K0+(u) Rcheck_{L0}(u)^2 |0 is a scalar
    auto tr_kr2 = [&](cplx u) {
        Mat r = rcheck(u, pair, p);
        return Mat(ptrace_last(kron(eye(4), k_plus(kp, u, p, cd)) * r * r, 2));
    };
    const Mat dkr2 = (tr_kr2(h) - tr_kr2(-h)) / (2.0 * h);
    rep.push_back(make_check("normalizer proportional to Id", off_scalar_residual(dkr2),
                             tol.fd_tol));
    const cplx norm_scalar = scalar_part(dkr2);

    // (3) normalized second derivative equals h_open / x up to additive identity
    const Mat h_norm = d2t / (4.0 * norm_scalar);
    const Mat h_ref = h_open(spec, p).mat / p.x;
    const cplx alpha = scalar_part(Mat(h_norm - h_ref));
    rep.push_back(make_check("normalized d2t/du2 vs h_open/x (mod Id)",
                             rel_residual(h_norm, h_ref + alpha * eye(dim)), tol.fd_tol,
                             "identity offset " + std::to_string(alpha.real())));

    // (4) A1 + A2 + A3 + A4 equals d2/du2 tr_0 K0+(u) Rcheck_{L0}(u)^2 |0
    const cplx a1 = (tr_kp(h) - 2.0 * tr_kp(0.0) + tr_kp(-h)) / (h * h);
    const Mat dkp = (k_plus(kp, h, p, cd) - k_plus(kp, -h, p, cd)) / (2.0 * h);
    const Mat a2 = 4.0 * ptrace_last(kron(eye(4), dkp) * hl0, 2);
    const Mat rpp = (pair.b + pair.binv) / p.x; // Rcheck''(0)
    const Mat a3 = 2.0 * ptrace_last(kp_aux * rpp, 2);
    const Mat a4 = 2.0 * ptrace_last(kp_aux * hl0 * hl0, 2);
    const Mat atot = a1 * eye(4) + a2 + a3 + a4;
    const Mat d2kr2 = (tr_kr2(h) - 2.0 * tr_kr2(0.0) + tr_kr2(-h)) / (h * h);
    rep.push_back(make_check("A1+A2+A3+A4 identity", rel_residual(atot, d2kr2), tol.fd_tol));

    // (5) rescaling the K solutions by f(u) = 1 + u/2 shifts the Hamiltonian
    // only by a multiple of the identity (t is linear in K-)
    auto t_scaled = [&](cplx u) { return Mat((1.0 + u / 2.0) * t_at(u)); };
    const Mat d2t_s = (t_scaled(h) - 2.0 * t_scaled(0.0) + t_scaled(-h)) / (h * h);
    const Mat h_norm_s = d2t_s / (4.0 * norm_scalar);
    const cplx alpha2 = scalar_part(Mat(h_norm_s - h_norm));
    rep.push_back(make_check("K rescale shifts only the identity part",
                             rel_residual(h_norm_s, h_norm + alpha2 * eye(dim)), tol.fd_tol));
    return rep;
}

SpectrumResult spectrum(const ChainOperator& h, const ToleranceConfig& tol) {
    const auto dim = h.mat.rows();
    if (dim > (1L << (2 * max_spectrum_sites())))
        throw SizeLimit("matrix too large for dense spectra");
    SpectrumResult s;
    s.eigenvalues = eigenvalues_sorted(h.mat);
    for (const cplx& ev : s.eigenvalues) {
        if (!s.groups.empty() && std::abs(ev - s.groups.back().first) <= tol.spectrum_tol)
            s.groups.back().second += 1;
        else
            s.groups.emplace_back(ev, 1);
    }
    return s;
}

RelationReport twist_equivalence_check(int max_sites, const DeformParams& p,
                                       const ToleranceConfig& tol) {
    RelationReport rep;
    for (int L = 2; L <= max_sites; ++L) {
        ChainSpec d{L, ChainModel::dist, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
        ChainSpec f = d;
        f.model = ChainModel::ferm;
        auto ed = eigenvalues_sorted(h_open(d, p).mat);
        auto ef = eigenvalues_sorted(h_open(f, p).mat);
        rep.push_back(make_check("dist/ferm spectra match, L=" + std::to_string(L),
                                 match_spectra(ed, ef), tol.spectrum_tol));
    }
    return rep;
}

RelationReport hdiff_check(int sites, const DeformParams& p, const ToleranceConfig& tol) {
    RelationReport rep;
    const FermionOps f = fermion_ops(p);
    ChainSpec d{sites, ChainModel::dist, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
    ChainSpec fm = d;
    fm.model = ChainModel::ferm;
    Mat diff = h_open(fm, p).mat - h_open(d, p).mat;
    Mat expected = p.x * (embed(f.n_dn, sites, sites).mat - embed(f.n_dn, 1, sites).mat);
    rep.push_back(make_check("H_ferm - H_dist = x (n_dn_L - n_dn_1), L=" + std::to_string(sites),
                             rel_residual(diff, expected), 1e-12,
                             "coefficient x/(q-q^-1) in the unit-pair-hopping convention"));
    return rep;
}

CheckReport special_boundary_equality(int sites, const DeformParams& p,
                                      const ToleranceConfig& tol) {
    const cplx c_sol = (p.q - 1.0 / p.q) / p.x - 1.0;
    ChainSpec d{sites, ChainModel::dist, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
    ChainSpec f = d;
    f.model = ChainModel::ferm;
    Mat lhs = h_open(d, p).mat
            + p.qq() * embed(boundary_term_b1(KFamily::b, c_sol, p), 1, sites).mat
            + p.qq() * embed(boundary_term_bl(KFamily::b, c_sol, p), sites, sites).mat;
    CheckReport c = make_check("H_dist + (q-q^-1)(B1^b + BL^b) at the special C = H_ferm",
                               rel_residual(lhs, h_open(f, p).mat), tol.identity_tol);
    c.note = "C- = C'+ = (q-q^-1)/x - 1";
    return c;
}

RelationReport invariance_check(int sites, const BraidPair& pair, const DeformParams& p,
                                const ToleranceConfig& tol) {
    RelationReport rep;
    GeneratorSet g = build_rep(p);
    AlgebraImages im = coproduct_images(g, p, sites);
    ChainSpec d{sites, ChainModel::dist, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
    const Mat h = h_open(d, p).mat;
    const Mat* gens[6] = {&im.e1, &im.e2, &im.f1, &im.f2, &im.k1, &im.k2};
    const char* names[6] = {"e1", "e2", "f1", "f2", "k1", "k2"};
    for (int i = 0; i < 6; ++i)
        rep.push_back(make_check(std::string("[H_open, Delta^L(") + names[i] + ")] = 0",
                                 comm_norm(h, *gens[i]), 1e-9));
    const Mat hp = h_periodic(sites, pair, p).mat;
    double viol = comm_norm(hp, im.e2);
    CheckReport c = make_check("[H_per, Delta^L(e2)] must NOT vanish", viol, 1.0,
                               "invariance violation, expected > 1e-3");
    c.pass = viol > 1e-3;
    rep.push_back(c);
    (void)tol;
    return rep;
}

Mat h_tl(const DeformParams& p) {
    if (!p.tl_mode) throw NotTLMode("h_tl needs lambda = q^{-1/2}");
    const cplx q = p.q, om(double(p.omega), 0.0);
    const FermionOps f = fermion_ops(p);
    const Mat id = eye(4);
    const Mat& nU = f.n_up;
    const Mat& nD = f.n_dn;

    Mat pair = kron(f.c_dn * f.c_up, f.c_up_dag * f.c_dn_dag)
             + kron(f.c_up_dag * f.c_dn_dag, f.c_dn * f.c_up);
    Mat spin = kron(f.s_plus, f.s_minus) + kron(f.s_minus, f.s_plus);
    Mat up_braces = (1.0 / q) * kron(nD, id) + q * kron(id, nD) - (q + 1.0 / q) * kron(nD, nD);
    Mat up_hop = om * (kron(f.c_up, f.c_up_dag) - kron(f.c_up_dag, f.c_up)) * up_braces;
    Mat dn_braces = kron(nU, id) + kron(id, nU) - 2.0 * kron(nU, nU);
    Mat dn_hop = (-kron(f.c_dn, f.c_dn_dag) + kron(f.c_dn_dag, f.c_dn)) * dn_braces;
    Mat diag = (kron(nU, id) - kron(id, nU))
             * ((1.0 / q) * kron(nD, id) - q * kron(id, nD) + (q - 1.0 / q) * kron(nD, nD));
    return pair + spin + up_hop + dn_hop + diag;
}

RelationReport tl_suite(int sites, const DeformParams& p, const ToleranceConfig& tol) {
    if (!p.tl_mode) throw NotTLMode("tl_suite needs lambda = q^{-1/2}");
    RelationReport rep;
    const double t = tol.identity_tol;
    const Mat e = h_tl(p);
    const int L = std::max(sites, 3);
    const Mat e1 = embed(e, 1, L).mat, e2 = embed(e, 2, L).mat;
    rep.push_back(make_check("e^2 = 0", (e * e).norm() / e.squaredNorm(), t));
    rep.push_back(make_check("e1 e2 e1 = e1", rel_residual(e1 * e2 * e1, e1), t));
    rep.push_back(make_check("e2 e1 e2 = e2", rel_residual(e2 * e1 * e2, e2), t));
    const Mat ea = embed(e, 1, 4).mat, eb = embed(e, 3, 4).mat;
    rep.push_back(make_check("far commutation", rel_residual(ea * eb, eb * ea), t));

    // parity-multiplied generator: Hermitian (real q only), nonzero square
    const FermionOps f = fermion_ops(p);
    const Mat pe = kron(f.parity, eye(4)) * e;
    const double herm = rel_residual(pe, Mat(pe.adjoint()));
    if (std::abs(p.q.imag()) < 1e-14)
        rep.push_back(make_check("parity-multiplied generator Hermitian", herm, t));
    else
        rep.push_back(make_info("parity-multiplied generator Hermiticity deviation", herm,
                                "asserted only for real q"));
    const Mat pe2 = pe * pe;
    const cplx alpha = scalar_fit(pe, pe2);
    rep.push_back(make_check("(Pe)^2 = alpha Pe", (pe2 - alpha * pe).norm() / pe2.norm(), t,
                             "alpha = " + std::to_string(alpha.real()) + " (expected 2(q+1/q) = "
                                 + std::to_string((p.q + 1.0 / p.q).real() * 2.0) + ")"));
    CheckReport nz = make_check("alpha nonzero", std::abs(alpha), 0.0, "nonvanishing square");
    nz.pass = std::abs(alpha) > tol.genericity_tol;
    rep.push_back(nz);
    const Mat p1 = embed(pe, 1, 3).mat, p2 = embed(pe, 2, 3).mat;
    const Mat y3 = p1 * p2 * p1;
    const cplx aprime = scalar_fit(p1, y3);
    rep.push_back(make_check("(Pe)1 (Pe)2 (Pe)1 = a' (Pe)1", (y3 - aprime * p1).norm() / y3.norm(),
                             t, "a' = " + std::to_string(aprime.real())));

    // informative: membership in span{Delta(Q+_p)} after the diagonal gauge
    // d = diag(i,1,1,1) per site that maps the Q-route combination to the real
    // fermionic form; the raw span residual is reported alongside
    GeneratorSet g = build_rep(p);
    AlgebraImages im2 = coproduct_images(g, p, 2);
    std::vector<Mat> basis;
    for (long pp = 0; pp <= 3; ++pp) basis.push_back(casimir_q(pp, QSign::plus, im2, p));
    Mat dg = Eigen::Vector4cd(cplx(0, 1), 1.0, 1.0, 1.0).asDiagonal();
    Mat gauge = kron(dg, dg);
    Mat gauge_i = gauge.inverse();
    auto span_residual = [&](const Mat& target) {
        // least squares over the (vectorized) basis
        Eigen::MatrixXcd a(256, basis.size());
        for (size_t k = 0; k < basis.size(); ++k)
            a.col(Eigen::Index(k)) = Eigen::Map<const Eigen::VectorXcd>(basis[k].data(), 256);
        Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(target.data(), 256);
        Eigen::VectorXcd sol = a.colPivHouseholderQr().solve(rhs);
        return (a * sol - rhs).norm() / rhs.norm();
    };
    rep.push_back(make_info("span{Delta(Q+_p)} membership of gauged h_tl",
                            span_residual(Mat(gauge_i * e * gauge)),
                            "after per-site gauge diag(i,1,1,1)"));
    rep.push_back(make_info("raw span membership (no gauge)", span_residual(e),
                            "gauge-sensitive, reported for reference"));
    return rep;
}

} // namespace qsl21
