#ifndef RESLIEP_CLASSIFICATION_HPP
#define RESLIEP_CLASSIFICATION_HPP

#include <optional>

#include "resliep/pmap.hpp"

namespace resliep {

/// Certificate of a restricted isomorphism h_m^lambda -> h_m^lambda':
/// Psi(e_i) = sum_j A_ij e_j + k_i e_{2m+1} for i <= 2m and
/// Psi(e_{2m+1}) = mu e_{2m+1}.
struct IsoWitness {
  Mat A;   // invertible 2m x 2m
  Vec k;   // length 2m
  Fq mu;   // nonzero, pinned by the symplectic-similitude condition
};

struct IsoCheckResult {
  bool cond1 = false;  // A J A^T = mu J
  bool cond2 = false;  // the [p]-image condition; quadratic form identity at p = 2
  bool cond3 = false;  // lambda_{2m+1} = mu^{p-1} lambda'_{2m+1}
  bool det_consistent = false;  // (det A)^2 = mu^{2m}
  bool ok() const { return cond1 && cond2 && cond3; }
};

/// Check the isomorphism conditions for a concrete witness. At p = 2 the
/// quadratic identity is verified for every a in F^{2m} (refused beyond 2^20).
IsoCheckResult iso_check(const Field& f, int m, const std::vector<Fq>& lambda,
                         const std::vector<Fq>& lambda2, const IsoWitness& w);

/// Exhaustive search for a witness: enumerates A with A J A^T a multiple of J
/// (mu is read off, never searched) and k in F^{2m}; returns the first witness
/// passing iso_check, in a fixed deterministic order.
std::optional<IsoWitness> find_iso(const Field& f, int m,
                                   const std::vector<Fq>& lambda,
                                   const std::vector<Fq>& lambda2);

/// The change-of-basis matrix of a witness: column i holds Psi(e_{i+1}).
Mat witness_basis_matrix(const Field& f, int m, const IsoWitness& w);

struct Orbit {
  std::vector<Fq> representative;  // lexicographically least member
  std::vector<std::vector<Fq>> members;
  uint64_t size() const { return members.size(); }
};

struct ClassifyResult {
  std::vector<Orbit> orbits;
  uint64_t total = 0;
  bool validated = false;       // pairwise agreement with the partition checked
  uint64_t validation_pairs = 0;
  uint64_t violations = 0;
};

struct ClassifyOptions {
  // full pairwise validation up to this many lambda values, sampled beyond
  uint64_t exhaustive_validation_limit = 32;
  int validation_samples = 200;
  uint64_t seed = 0;
};

/// Partition all lambda in F^{2m+1} into isomorphism classes, seeding a
/// union-find by single-target searches from the lexicographically least
/// unclassified lambda.
ClassifyResult classify(const Field& f, int m, const ClassifyOptions& opt = {});

/// Independent oracle: enumerate every invertible matrix of the full algebra
/// and test bracket preservation on basis pairs and [p]-preservation on all
/// vectors. Only feasible for dim <= 3 over |F| <= 5.
bool brute_force_algebra_iso(const RestrictedAlgebra& R1, const RestrictedAlgebra& R2);

/// Same oracle with the lambda-independent part (invertible bracket-compatible
/// matrices, vector enumeration) cached across calls.
class BruteForceIsoTester {
 public:
  BruteForceIsoTester(const LieAlgebra& L1, const LieAlgebra& L2);
  bool isomorphic(const PMap& P1, const PMap& P2) const;

 private:
  const Field f_;
  int n_;
  LieAlgebra l1_, l2_;
  std::vector<Vec> vectors_;          // all of F^n, by index
  std::vector<Mat> candidates_;       // invertible, bracket-preserving
  std::vector<std::vector<uint32_t>> candidate_action_;  // index permutation per candidate
};

}  // namespace resliep

#endif
