#ifndef RESLIEP_TEST_HELPERS_HPP
#define RESLIEP_TEST_HELPERS_HPP

#include <random>

#include "resliep/pmap.hpp"

namespace resliep::testing {

/// Random 2-step nilpotent algebra: the last `central` basis vectors are
/// central, every bracket of the remaining ones lands in their span. Every
/// Jacobi summand has a central inner bracket, so the identity holds by
/// construction.
inline LieAlgebra random_two_step(const Field& f, int n, int central,
                                  std::mt19937_64& rng) {
  LieAlgebra L(f, n);
  int body = n - central;
  for (int i = 1; i <= body; ++i)
    for (int j = i + 1; j <= body; ++j) {
      std::vector<std::pair<int, Fq>> terms;
      for (int r = body + 1; r <= n; ++r) {
        Fq c = f.random(rng);
        if (!f.is_zero(c)) terms.emplace_back(r, c);
      }
      if (!terms.empty()) L.set_bracket(i, j, terms);
    }
  return L;
}

inline std::vector<Fq> lambda_zero(const Field& f, int m) {
  (void)f;
  return std::vector<Fq>(2 * m + 1);
}

inline std::vector<Fq> lambda_e1(const Field& f, int m) {
  std::vector<Fq> l(2 * m + 1);
  l[0] = f.one();
  return l;
}

inline std::vector<Fq> lambda_etop(const Field& f, int m) {
  std::vector<Fq> l(2 * m + 1);
  l[2 * m] = f.one();
  return l;
}

inline std::vector<Fq> random_lambda(const Field& f, int m, std::mt19937_64& rng) {
  std::vector<Fq> l(2 * m + 1);
  for (auto& c : l) c = f.random(rng);
  return l;
}

inline RestrictedHeisenberg make_rh(const Field& f, int m, const std::vector<Fq>& lambda) {
  return heisenberg_restricted(f, HeisenbergParams{m, lambda});
}

/// Enumerate all vectors of F^n when |F|^n stays within `limit`; empty
/// otherwise.
inline std::vector<Vec> all_vectors(const Field& f, int n, uint64_t limit) {
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= f.order();
    if (total > limit) return {};
  }
  std::vector<Vec> out;
  out.reserve(total);
  for (uint64_t idx = 0; idx < total; ++idx) {
    Vec v(n);
    uint64_t t = idx;
    for (int i = 0; i < n; ++i) {
      v[i] = f.element(t % f.order());
      t /= f.order();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace resliep::testing

#endif
