#include "resliep/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace resliep {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> cochain_basis(int n, int q) {
  if (q < 0 || q > n) throw std::invalid_argument("cochain degree out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(q);
  for (int i = 0; i < q; ++i) cur[i] = i + 1;
  if (q == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int t = q - 1;
    while (t >= 0 && cur[t] == n - (q - 1 - t)) --t;
    if (t < 0) break;
    ++cur[t];
    for (int i = t + 1; i < q; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

int subset_index(int n, const std::vector<int>& subset) {
  int q = static_cast<int>(subset.size());
  long long r = 0;
  int prev = 0;
  for (int t = 0; t < q; ++t) {
    for (int v = prev + 1; v < subset[t]; ++v) r += binomial(n - v, q - 1 - t);
    prev = subset[t];
  }
  return static_cast<int>(r);
}

Fq eval_cochain2(const Field& f, int n, const Vec& phi, const Vec& x, const Vec& y) {
  Fq acc{};
  int idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++idx) {
      if (f.is_zero(phi[idx])) continue;
      Fq w = f.sub(f.mul(x[i - 1], y[j - 1]), f.mul(x[j - 1], y[i - 1]));
      acc = f.add(acc, f.mul(phi[idx], w));
    }
  return acc;
}

Mat differential_matrix(const LieAlgebra& L, int q) {
  const Field& f = L.field();
  const int n = L.dim();
  if (q < 0 || q >= n) throw std::invalid_argument("differential degree out of range");

  auto rows_sets = cochain_basis(n, q + 1);
  Mat d(f, static_cast<int>(rows_sets.size()), static_cast<int>(binomial(n, q)));

  for (size_t row = 0; row < rows_sets.size(); ++row) {
    const std::vector<int>& T = rows_sets[row];
    for (int u = 0; u < q + 1; ++u)
      for (int v = u + 1; v < q + 1; ++v) {
        Vec b = L.bracket_basis(T[u], T[v]);
        if (vec_is_zero(b)) continue;
        bool minus = ((u + v + 1) % 2) != 0;
        std::vector<int> rest;
        rest.reserve(q - 1);
        for (int t = 0; t < q + 1; ++t)
          if (t != u && t != v) rest.push_back(T[t]);
        for (int r = 1; r <= n; ++r) {
          if (f.is_zero(b[r - 1])) continue;
          if (std::find(rest.begin(), rest.end(), r) != rest.end()) continue;
          // sort e_r into the wedge; each smaller member contributes a sign
          int below = static_cast<int>(
              std::lower_bound(rest.begin(), rest.end(), r) - rest.begin());
          std::vector<int> s = rest;
          s.insert(s.begin() + below, r);
          Fq c = b[r - 1];
          if (minus != (below % 2 != 0)) c = f.neg(c);
          int col = subset_index(n, s);
          d.at(static_cast<int>(row), col) = f.add(d.at(static_cast<int>(row), col), c);
        }
      }
  }
  return d;
}

CohomologyReport cohomology(const LieAlgebra& L, int q) {
  const Field& f = L.field();
  const int n = L.dim();
  if (q < 0 || q > n) throw std::invalid_argument("cohomology degree out of range");

  std::vector<Vec> cocycles;
  if (q < n) {
    cocycles = kernel_basis(differential_matrix(L, q));
  } else {
    for (int i = 1; i <= static_cast<int>(binomial(n, q)); ++i)
      cocycles.push_back(basis_vec(f, static_cast<int>(binomial(n, q)), i));
  }

  std::vector<Vec> coboundaries;
  if (q > 0) {
    Mat prev = differential_matrix(L, q - 1);
    for (int j = 0; j < prev.cols(); ++j) {
      Vec c = prev.col(j);
      if (!vec_is_zero(c)) coboundaries.push_back(std::move(c));
    }
  }

  CohomologyReport rep;
  rep.q = q;
  rep.dim_cocycles = static_cast<int>(cocycles.size());
  rep.dim_coboundaries =
      span_rank(f, coboundaries, static_cast<int>(binomial(n, q)));
  rep.dim_H = rep.dim_cocycles - rep.dim_coboundaries;
  rep.representatives = quotient_representatives(f, cocycles, coboundaries,
                                                 static_cast<int>(binomial(n, q)));
  return rep;
}

long long betti_closed_form(int m, int p, int n_deg) {
  if (n_deg < 0 || n_deg > m)
    throw std::invalid_argument("closed-form Betti number is only valid for degrees <= m");
  long long n = n_deg;
  long long total = binomial(2 * m, n) - binomial(2 * m, n - 2);
  for (long long i = 1; i <= (n + 1) / (2 * p); ++i)
    total += binomial(2 * m + 1, n - 2 * i * p + 1);
  for (long long i = 1; i <= (n - 1) / (2 * p); ++i)
    total -= binomial(2 * m + 1, n - 2 * i * p - 1);
  return total;
}

}  // namespace resliep
