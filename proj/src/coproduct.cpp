#include "qsl21/coproduct.hpp"
#include "qsl21/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace qsl21 {

namespace {
int limit_from_env(const char* var, int fallback) {
    const char* v = std::getenv(var);
    if (!v) return fallback;
    int n = std::atoi(v);
    return n >= 1 && n <= 8 ? n : fallback;
}
} // namespace

int max_sites() {
    static const int n = limit_from_env("QSL21_MAX_SITES", 6);
    return n;
}

int max_spectrum_sites() {
    static const int n = limit_from_env("QSL21_MAX_SPECTRUM_SITES", 5);
    return n;
}

int state_degree(Eigen::Index idx, Eigen::Index dim) {
    static const int deg4[4] = {0, 1, 1, 0};
    int d = 0;
    while (dim > 1) {
        dim /= 4;
        d += deg4[idx / dim];
        idx %= dim;
    }
    return d & 1;
}

Mat parity_matrix(Eigen::Index dim) {
    Mat g = Mat::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        g(j, j) = state_degree(j, dim) ? -1.0 : 1.0;
    return g;
}

Mat ng_kron(const Mat& a, const Mat& b) {
    const Eigen::Index n = a.rows(), m = b.rows();
    Mat out = Mat::Zero(n * m, n * m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (a(i, j) == 0.0) continue;
            const int dj = state_degree(j, n);
            for (Eigen::Index k = 0; k < m; ++k)
                for (Eigen::Index l = 0; l < m; ++l) {
                    if (b(k, l) == 0.0) continue;
                    double s = (dj * (state_degree(k, m) + state_degree(l, m))) % 2 ? -1.0 : 1.0;
                    out(i * m + k, j * m + l) = s * a(i, j) * b(k, l);
                }
        }
    return out;
}

namespace {

// symbolic coproduct: Delta(k) = k(x)k, Delta(e) = e(x)1 + k(x)e,
// Delta(f) = f(x)k^-1 + 1(x)f; group-likes and the identity split trivially
using SymTerm = std::pair<std::string, std::string>;

std::vector<SymTerm> sym_coproduct(const std::string& tok) {
    if (tok == "id" || tok == "k1" || tok == "k2" || tok == "k1inv" || tok == "k2inv")
        return {{tok, tok}};
    if (tok == "e1") return {{"e1", "id"}, {"k1", "e1"}};
    if (tok == "e2") return {{"e2", "id"}, {"k2", "e2"}};
    if (tok == "f1") return {{"f1", "k1inv"}, {"id", "f1"}};
    if (tok == "f2") return {{"f2", "k2inv"}, {"id", "f2"}};
    throw UnknownToken("no coproduct rule for: " + tok);
}

Mat resolve(const std::string& tok, const GeneratorSet& g) {
    if (tok == "id") return eye(4);
    if (tok == "e1") return g.e1;
    if (tok == "e2") return g.e2;
    if (tok == "f1") return g.f1;
    if (tok == "f2") return g.f2;
    if (tok == "k1") return g.k1;
    if (tok == "k2") return g.k2;
    if (tok == "k1inv") return g.k1.inverse();
    if (tok == "k2inv") return g.k2.inverse();
    throw UnknownToken("unknown generator token: " + tok);
}

} // namespace

Mat coproduct_generator(const std::string& name, const GeneratorSet& g,
                        const DeformParams&) {
    Mat out = Mat::Zero(16, 16);
    for (const auto& [l, r] : sym_coproduct(name))
        out += ng_kron(resolve(l, g), resolve(r, g));
    return out;
}

AlgebraImages coproduct_images2(const GeneratorSet& g, const DeformParams& p) {
    AlgebraImages a;
    a.e1 = coproduct_generator("e1", g, p);
    a.e2 = coproduct_generator("e2", g, p);
    a.f1 = coproduct_generator("f1", g, p);
    a.f2 = coproduct_generator("f2", g, p);
    a.k1 = coproduct_generator("k1", g, p);
    a.k2 = coproduct_generator("k2", g, p);
    return a;
}

namespace {

// closed forms of the L-fold non-graded coproduct image:
//   k:  k^{(x)L}
//   e:  sum_j (k g^{deg e})^{(x)(j-1)} (x) e (x) 1^{(x)(L-j)}
//   f:  sum_j (g^{deg f})^{(x)(j-1)} (x) f (x) (k^{-1})^{(x)(L-j)}
Mat iterate_group_like(const Mat& k, int L) {
    Mat out = k;
    for (int i = 1; i < L; ++i) out = kron(out, k);
    return out;
}

Mat iterate_ladder(const Mat& op, const Mat& before, const Mat& after, int L) {
    const Eigen::Index dim = 1L << (2 * L);
    Mat out = Mat::Zero(dim, dim);
    for (int j = 0; j < L; ++j) {
        Mat term = Mat::Ones(1, 1);
        for (int m = 0; m < L; ++m)
            term = kron(term, m < j ? before : (m == j ? op : after));
        out += term;
    }
    return out;
}

} // namespace

AlgebraImages coproduct_images(const GeneratorSet& g, const DeformParams&, int L) {
    if (L < 1) throw SiteOutOfRange("L must be >= 1");
    if (L > max_sites()) throw SizeLimit("L exceeds the configured maximum");
    if (L == 1) return g;
    const Mat g1 = parity_matrix(4), id = eye(4);
    AlgebraImages a;
    a.k1 = iterate_group_like(g.k1, L);
    a.k2 = iterate_group_like(g.k2, L);
    a.e1 = iterate_ladder(g.e1, g.deg_e1 ? Mat(g.k1 * g1) : g.k1, id, L);
    a.e2 = iterate_ladder(g.e2, g.deg_e2 ? Mat(g.k2 * g1) : g.k2, id, L);
    a.f1 = iterate_ladder(g.f1, g.deg_e1 ? g1 : id, Mat(g.k1.inverse()), L);
    a.f2 = iterate_ladder(g.f2, g.deg_e2 ? g1 : id, Mat(g.k2.inverse()), L);
    return a;
}

ChainOperator coproduct_l(const std::string& name, int L, const GeneratorSet& g,
                          const DeformParams& p) {
    AlgebraImages a = coproduct_images(g, p, L);
    ChainOperator out;
    out.sites = L;
    if (name == "e1") out.mat = a.e1;
    else if (name == "e2") out.mat = a.e2;
    else if (name == "f1") out.mat = a.f1;
    else if (name == "f2") out.mat = a.f2;
    else if (name == "k1") out.mat = a.k1;
    else if (name == "k2") out.mat = a.k2;
    else throw UnknownToken("unknown generator: " + name);
    return out;
}

Mat coproduct_element(const std::vector<std::string>& word, const AlgebraImages& g,
                      const DeformParams& p) {
    const Eigen::Index n = g.e1.rows();
    Mat acc = eye(n);
    for (const auto& tok : word) {
        Mat m;
        if (tok == "e1") m = g.e1;
        else if (tok == "e2") m = g.e2;
        else if (tok == "f1") m = g.f1;
        else if (tok == "f2") m = g.f2;
        else if (tok == "k1") m = g.k1;
        else if (tok == "k2") m = g.k2;
        else if (tok == "k1inv") m = g.k1.inverse();
        else if (tok == "k2inv") m = g.k2.inverse();
        else if (tok == "e3") m = g.e1 * g.e2 - (1.0 / p.q) * g.e2 * g.e1;
        else if (tok == "f3") m = g.f2 * g.f1 - p.q * g.f1 * g.f2;
        else if (tok == "id") m = eye(n);
        else if (tok.rfind("[h2", 0) == 0 || tok.rfind("[h1+h2", 0) == 0) {
            // Cartan-bracket tokens "[h2+s]" / "[h1+h2+s]" on the k-images
            size_t base = tok.rfind("[h1+h2", 0) == 0 ? 6 : 3;
            std::string rest = tok.substr(base, tok.size() - base - 1);
            long shift = rest.empty() ? 0 : std::stol(rest);
            m = cartan_qbracket(base == 6 ? Mat(g.k1 * g.k2) : g.k2, shift, p);
        }
        else if (tok.size() > 1 && (tok[0] == 'C' || tok[0] == 'S')) {
            long pp = std::stol(tok.substr(1));
            m = tok[0] == 'C' ? casimir_c(pp, g, p) : scasimir_s(pp, g, p);
        } else if (tok.size() > 2 && tok[0] == 'Q') {
            long pp = std::stol(tok.substr(2));
            m = casimir_q(pp, tok[1] == '+' ? QSign::plus : QSign::minus, g, p);
        } else {
            throw UnknownToken("unknown token: " + tok);
        }
        acc = acc * m;
    }
    return acc;
}

ChainOperator embed(const Mat& op, int site, int L) {
    if (L < 1 || L > max_sites()) throw SizeLimit("chain length out of range");
    const int span = op.rows() == 4 ? 1 : (op.rows() == 16 ? 2 : 0);
    if (span == 0) throw Error("embed expects a 4x4 or 16x16 operator");
    if (site < 1 || site + span - 1 > L) throw SiteOutOfRange("site index out of range");
    Mat left = eye(1L << (2 * (site - 1)));
    Mat right = eye(1L << (2 * (L - site - span + 1)));
    ChainOperator out;
    out.sites = L;
    out.mat = kron(kron(left, op), right);
    return out;
}

double coassociativity_residual(const GeneratorSet& g, const DeformParams& p) {
    // (Delta (x) 1)Delta vs (1 (x) Delta)Delta, each evaluated with the grouped
    // sign rule (inner pair combined first, then treated as one 16-dim leg with
    // composite state degrees), cross-checked against the L=3 closed form.
    AlgebraImages closed = coproduct_images(g, p, 3);
    const Mat* closed_of[6] = {&closed.e1, &closed.e2, &closed.f1,
                               &closed.f2, &closed.k1, &closed.k2};
    const std::string names[6] = {"e1", "e2", "f1", "f2", "k1", "k2"};
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        Mat left = Mat::Zero(64, 64), right = Mat::Zero(64, 64);
        for (const auto& [l, r] : sym_coproduct(names[i])) {
            for (const auto& [l2, r2] : sym_coproduct(l))
                left += ng_kron(ng_kron(resolve(l2, g), resolve(r2, g)), resolve(r, g));
            for (const auto& [l2, r2] : sym_coproduct(r))
                right += ng_kron(resolve(l, g), ng_kron(resolve(l2, g), resolve(r2, g)));
        }
        worst = std::max(worst, rel_residual(left, right));
        worst = std::max(worst, rel_residual(left, *closed_of[i]));
    }
    return worst;
}

} // namespace qsl21
