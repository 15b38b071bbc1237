#ifndef RESLIEP_RESTRICTED_COHOMOLOGY_HPP
#define RESLIEP_RESTRICTED_COHOMOLOGY_HPP

#include <functional>

#include "resliep/cohomology.hpp"
#include "resliep/pmap.hpp"

namespace resliep {

/// A restricted 2-cochain (phi, omega) in the basis
/// {(e^{i,j}, tilde e^{i,j})} u {(0, ebar^i)}: phi holds the C(n,2) ordinary
/// coordinates, frob the n coordinates of omega - tilde(phi) in the Frobenius
/// dual basis. The decomposition is unique because tilde(phi) vanishes on
/// basis vectors.
struct RestrictedTwoCochain {
  Vec phi;
  Vec frob;
};

/// Values of a 3-cochain pair (zeta, eta) on the data that determines it:
/// zeta in coordinates, eta on ordered basis pairs.
struct RestrictedThreeCochainData {
  Vec zeta;  // C(n,3) coordinates
  Mat eta;   // eta.at(i,j) = eta(e_{i+1}, e_{j+1})
};

/// The correction sum of the compatibility recursion: over all 2^{p-2}
/// sequences (g_1,...,g_p) with entries in {g,h}, g_1 = g, g_2 = h, the term
/// phi([g_1,...,g_{p-1}] ^ g_p) / #(g) with left-normed iterated brackets.
Fq compat_correction(const LieAlgebra& L, const Vec& phi, const Vec& g, const Vec& h);

/// The unique phi-compatible map vanishing on all basis vectors, evaluated by
/// folding the recursion over the basis expansion of g.
Fq tilde_eval(const LieAlgebra& L, const Vec& phi, const Vec& g);

/// omega(g) = tilde(phi)(g) + sum_i frob_i g_i^p.
Fq omega_eval(const LieAlgebra& L, const RestrictedTwoCochain& rc, const Vec& g);

/// Verify both phi-compatibility conditions for an arbitrary map omega:
/// p-homogeneity on (a, g) and the recursion on (g, h) pairs. Exhaustive mode
/// requires |F|^n <= 2^15.
bool compat_check(const LieAlgebra& L, const Vec& phi,
                  const std::function<Fq(const Vec&)>& omega, bool exhaustive,
                  int samples, std::mt19937_64& rng);

/// n x n matrix with entry (i, j) = j-th coordinate of e_{i+1}^{[p]}; the
/// matrix of psi |-> ind^1(psi) in the Frobenius dual basis.
Mat ind1_matrix(const LieAlgebra& L, const PMap& P);

/// d^1_*(psi) = (d^1 psi, ind^1(psi)); the frob part is psi(e_i^{[p]}).
RestrictedTwoCochain d1_star(const LieAlgebra& L, const PMap& P, const Vec& psi);

/// Matrix of d^1_* : C^1 -> C^2_*, (C(n,2)+n) x n.
Mat d1_star_matrix(const LieAlgebra& L, const PMap& P);

/// ind^2(phi)(g,h) = phi(g ^ h^{[p]}) - phi([g,h,...,h] ^ h) with p-1 copies
/// of h in the bracket; independent of the compatible partner omega.
Fq ind2_eval(const LieAlgebra& L, const PMap& P, const Vec& phi, const Vec& g,
             const Vec& h);

/// ind^2(phi)(., h) is linear in the first slot; returns w with
/// ind^2(phi)(g, h) = sum_r g_r w_r for every g.
Vec ind2_functional(const LieAlgebra& L, const PMap& P, const Vec& phi, const Vec& h);

/// d^2_* data of phi: zeta = d^2(phi), eta = ind^2(phi) on basis pairs.
RestrictedThreeCochainData ind2_on_pairs(const LieAlgebra& L, const PMap& P,
                                         const Vec& phi);

/// Matrix of d^2_* : C^2_* -> (zeta, eta-on-pairs) coordinates,
/// (C(n,3) + n^2) x (C(n,2) + n). The frob columns vanish.
Mat d2_star_matrix(const LieAlgebra& L, const PMap& P);

/// Restricted cohomology in degree 1 or 2 by exact rank computation.
/// Representatives carry (phi | frob) coordinates for q = 2.
CohomologyReport restricted_cohomology(const LieAlgebra& L, const PMap& P, int q);

/// The connecting map on a 2-cocycle: entry (j, h) holds
/// Delta_phi(e_{j+1})(e_{h+1}) = phi(e_h ^ e_j^{[p]}) - phi([e_h,e_j,...,e_j] ^ e_j).
/// Refuses non-cocycles.
Mat delta_map(const LieAlgebra& L, const PMap& P, const Vec& phi);

/// Exactness report for the six-term sequence
/// 0 -> H^1_* -> H^1 -> Hom_Fr(g,F) -> H^2_* -> H^2 -> Hom_Fr(g,H^1)
/// and, whenever Delta vanishes on cocycles, the short sequence
/// 0 -> Hom_Fr -> H^2_* -> H^2 -> 0.
struct SequenceReport {
  int dim_H1 = 0;
  int dim_H1_star = 0;
  int dim_HomFr = 0;
  int dim_H2 = 0;
  int dim_H2_star = 0;
  int delta_rank = 0;  // rank of Delta on cocycle classes
  bool delta_zero = false;
  bool delta_kills_coboundaries = false;
  bool exact_at_H1_star = false;
  bool exact_at_H1 = false;
  bool exact_at_HomFr = false;
  bool exact_at_H2_star = false;
  bool exact_at_H2 = false;
  bool ses_applicable = false;
  bool ses_exact = false;

  bool all_exact() const {
    return exact_at_H1_star && exact_at_H1 && exact_at_HomFr && exact_at_H2_star &&
           exact_at_H2;
  }
};

SequenceReport verify_sequences(const LieAlgebra& L, const PMap& P);

}  // namespace resliep

#endif
