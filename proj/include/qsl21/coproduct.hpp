#pragma once

#include "qsl21/uqsl21.hpp"

namespace qsl21 {

/// dense operator on an L-site chain of four-state sites
struct ChainOperator {
    int sites = 1;
    Mat mat;
};

/// chain-size caps (defaults 6 and 5); QSL21_MAX_SITES and
/// QSL21_MAX_SPECTRUM_SITES override them, hard-capped at 8
int max_sites();
int max_spectrum_sites();

/// state degrees on one site: deg(1)=deg(4)=0, deg(2)=deg(3)=1
int state_degree(Eigen::Index idx, Eigen::Index dim);

/// the parity matrix g = sum_j (-1)^{deg(j)} E_jj on a 4^k-dimensional leg
Mat parity_matrix(Eigen::Index dim);

/// Jordan-Wigner corrected Kronecker product:
///   E_ij (x) E_kl -> (-1)^{deg(j)(deg(k)+deg(l))} E_ij (x) E_kl.
/// Applied once, inside coproduct evaluation; chain operators downstream are
/// ordinary matrices with ordinary products and traces.
Mat ng_kron(const Mat& a, const Mat& b);

/// (rho (x) rho) Delta(generator) after the sign transform; name in
/// {e1,e2,f1,f2,k1,k2}; uses the coproduct of the basis g is in
Mat coproduct_generator(const std::string& name, const GeneratorSet& g,
                        const DeformParams& p);

/// all six coproduct images at once (the chain-level AlgebraImages for L=2)
AlgebraImages coproduct_images2(const GeneratorSet& g, const DeformParams& p);

/// L-fold iterated coproduct images (left-nested; order immaterial by
/// coassociativity). L = 1 returns the representation itself.
AlgebraImages coproduct_images(const GeneratorSet& g, const DeformParams& p, int L);

ChainOperator coproduct_l(const std::string& name, int L, const GeneratorSet& g,
                          const DeformParams& p);

/// evaluate a word in the generators under the coproduct images; tokens:
/// e1 e2 f1 f2 k1 k2 k1inv k2inv e3 f3, C<p>, S<p>, Q+<p>, Q-<p>, id, and
/// Cartan brackets "[h2+s]" / "[h1+h2+s]" (integer shift s, may be omitted)
Mat coproduct_element(const std::vector<std::string>& word, const AlgebraImages& g,
                      const DeformParams& p);

/// Kronecker placement of a one-site (4x4) or two-site (16x16) operator at
/// `site` (1-based) of an L-site chain, identities elsewhere
ChainOperator embed(const Mat& op, int site, int L);

/// both nesting orders of Delta^{(3)} evaluated with grouped sign rules;
/// returns the worst generator residual (coassociativity + sign consistency)
double coassociativity_residual(const GeneratorSet& g, const DeformParams& p);

} // namespace qsl21
