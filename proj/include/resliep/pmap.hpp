#ifndef RESLIEP_PMAP_HPP
#define RESLIEP_PMAP_HPP

#include <random>
#include <string>
#include <vector>

#include "resliep/lie_algebra.hpp"

namespace resliep {

/// A [p]-operator given by its values on basis vectors: images[i] = e_{i+1}^{[p]}.
/// Generic evaluation on arbitrary vectors goes through pmap_eval.
struct PMap {
  std::vector<Vec> images;
};

struct RestrictedAlgebra {
  LieAlgebra alg;
  PMap pmap;
};

/// Matrix of polynomials in a formal variable t, entries of degree <= p-1.
/// Carries the expansion of ad(t*g + h) used by the s_i correction terms.
class PolyMat {
 public:
  using Poly = std::vector<Fq>;  // coefficient c_d of t^d at index d

  /// t * ad(g) + ad(h)
  PolyMat(const LieAlgebra& L, const Vec& g, const Vec& h);

  /// Apply to a vector of polynomials, truncating at degree maxdeg.
  std::vector<Poly> apply(const std::vector<Poly>& v, int maxdeg) const;

  int dim() const { return n_; }

 private:
  const Field& f_;
  int n_;
  std::vector<Poly> a_;  // row-major, each entry degree <= 1
};

/// The correction terms of the sum axiom: i*s_i(g,h) is the coefficient of
/// t^{i-1} in (ad(tg+h))^{p-1}(g). Returns s_1, ..., s_{p-1}.
std::vector<Vec> s_terms(const LieAlgebra& L, const Vec& g, const Vec& h);

/// g^{[p]} for arbitrary g, folding the sum axiom over the basis expansion
/// left to right and the scaling axiom on each a_i e_i.
Vec pmap_eval(const LieAlgebra& L, const PMap& P, const Vec& g);

struct AxiomReport {
  bool jacobson_ok = true;   // ad(e_i^{[p]}) = (ad e_i)^p on every basis vector
  bool scaling_ok = true;    // (a g)^{[p]} = a^p g^{[p]}
  bool sum_ok = true;        // (g+h)^{[p]} = g^{[p]} + h^{[p]} + sum s_i(g,h)
  bool ad_ok = true;         // ad(g^{[p]}) = (ad g)^p
  std::string counterexample;
  bool ok() const { return jacobson_ok && scaling_ok && sum_ok && ad_ok; }
};

/// Check the restricted-algebra axioms: the Jacobson condition exhaustively on
/// basis vectors, the three axioms on random samples. Failures land in the
/// report, never in exceptions.
AxiomReport verify_restricted(const RestrictedAlgebra& R, int samples,
                              std::mt19937_64& rng);

struct HeisenbergParams {
  int m = 1;
  std::vector<Fq> lambda;  // 2m+1 entries
};

/// h_m^lambda: the Heisenberg algebra with e_i^{[p]} = lambda_i e_{2m+1},
/// plus the closed-form evaluator of the [p]-operator.
struct RestrictedHeisenberg {
  RestrictedAlgebra ra;
  HeisenbergParams params;

  /// p > 2: (sum a_i^p lambda_i) e_{2m+1};
  /// p = 2: (sum a_i^2 lambda_i + sum_{j<=m} a_j a_{m+j}) e_{2m+1}.
  Vec pow_closed_form(const Vec& g) const;
};

RestrictedHeisenberg heisenberg_restricted(const Field& f, const HeisenbergParams& hp);

/// Pull back a restricted algebra along a new basis: column j of `basis` holds
/// the coordinates of the new basis vector f_{j+1}. Structure constants and
/// [p]-images are re-expressed in the new basis.
RestrictedAlgebra transport(const RestrictedAlgebra& R, const Mat& basis);

Vec random_vec(const Field& f, int n, std::mt19937_64& rng);

}  // namespace resliep

#endif
