#ifndef RESLIEP_LIE_ALGEBRA_HPP
#define RESLIEP_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "resliep/matrix.hpp"

namespace resliep {

/// Finite-dimensional Lie algebra given by structure constants on an ordered
/// basis e_1, ..., e_n (1-based throughout). Brackets are stored sparsely for
/// i < j only; antisymmetry is structural. The constructor does not check
/// Jacobi, so deliberately invalid algebras can be built for negative tests;
/// structure_report() validates.
class LieAlgebra {
 public:
  LieAlgebra(const Field& f, int n) : f_(f), n_(n) {}

  const Field& field() const { return f_; }
  int dim() const { return n_; }

  /// Define [e_i, e_j] = sum of c_r e_r, i < j required. Zero terms dropped.
  void set_bracket(int i, int j, const std::vector<std::pair<int, Fq>>& terms);

  /// [e_i, e_j] for any i, j (antisymmetry applied).
  Vec bracket_basis(int i, int j) const;

  /// Bilinear bracket of arbitrary vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(x): column j holds [x, e_j].
  Mat ad(const Vec& x) const;

  const std::map<std::pair<int, int>, std::vector<std::pair<int, Fq>>>& entries()
      const {
    return sc_;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.f_ == b.f_ && a.n_ == b.n_ && a.sc_ == b.sc_;
  }

 private:
  Field f_;
  int n_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Fq>>> sc_;
};

/// Matrix of (ad x)^e.
Mat ad_power(const LieAlgebra& L, const Vec& x, int e);

/// The Heisenberg algebra h_m: dimension 2m+1, [e_i, e_{m+i}] = e_{2m+1}.
LieAlgebra heisenberg(const Field& f, int m);

struct StructureReport {
  bool jacobi_ok = false;
  std::vector<Vec> center;
  std::vector<Vec> derived;
  std::optional<int> nilpotency_class;  // empty when not nilpotent
};

/// Jacobi on all basis triples, center and derived subalgebra bases by rank,
/// nilpotency class from the lower central series.
StructureReport structure_report(const LieAlgebra& L);

}  // namespace resliep

#endif
