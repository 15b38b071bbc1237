#ifndef RESLIEP_COHOMOLOGY_HPP
#define RESLIEP_COHOMOLOGY_HPP

#include <vector>

#include "resliep/lie_algebra.hpp"

namespace resliep {

long long binomial(long long n, long long k);

/// All q-element subsets of {1..n} in lexicographic order (1-based members).
std::vector<std::vector<int>> cochain_basis(int n, int q);

/// Position of a subset in the lexicographic enumeration, 0-based.
int subset_index(int n, const std::vector<int>& subset);

/// 0-based position of the pair (i, j), i < j, among the 2-subsets of {1..n}.
inline int pair_index(int n, int i, int j) {
  return (i - 1) * n - (i * (i + 1)) / 2 + j - 1;
}

/// A q-cochain in coordinates: coeffs indexed by the lexicographic q-subsets.
struct Cochain {
  int q = 0;
  Vec coeffs;
};

/// phi(x ^ y) for a 2-cochain given by its C(n,2) coordinates.
Fq eval_cochain2(const Field& f, int n, const Vec& phi, const Vec& x, const Vec& y);

/// Matrix of d^q : C^q -> C^{q+1} in the lexicographic bases, C(n,q+1) rows by
/// C(n,q) columns. Signs follow the convention d^1(psi)(g^h) = psi([g,h]),
/// d^2(phi)(g^h^f) = phi([g,h]^f) - phi([g,f]^h) + phi([h,f]^g), extended to
/// all degrees.
Mat differential_matrix(const LieAlgebra& L, int q);

struct CohomologyReport {
  int q = 0;
  int dim_cocycles = 0;
  int dim_coboundaries = 0;
  int dim_H = 0;
  std::vector<Vec> representatives;  // coordinate vectors, canonical
};

/// H^q with trivial coefficients by exact rank computation.
CohomologyReport cohomology(const LieAlgebra& L, int q);

/// The closed-form Betti number of h_m in characteristic p, valid for
/// n_deg <= m; out-of-range degrees are refused.
long long betti_closed_form(int m, int p, int n_deg);

}  // namespace resliep

#endif
