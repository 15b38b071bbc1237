#include "resliep/lie_algebra.hpp"

#include <stdexcept>

namespace resliep {

void LieAlgebra::set_bracket(int i, int j, const std::vector<std::pair<int, Fq>>& terms) {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i >= j)
    throw std::invalid_argument("set_bracket needs 1 <= i < j <= dim");
  std::vector<std::pair<int, Fq>> kept;
  for (const auto& [r, c] : terms) {
    if (r < 1 || r > n_) throw std::invalid_argument("bracket target out of range");
    if (!f_.is_zero(c)) kept.emplace_back(r, c);
  }
  if (kept.empty())
    sc_.erase({i, j});
  else
    sc_[{i, j}] = std::move(kept);
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec v(n_);
  if (i == j) return v;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = sc_.find({i, j});
  if (it == sc_.end()) return v;
  for (const auto& [r, c] : it->second) v[r - 1] = flip ? f_.neg(c) : c;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("bracket dimension mismatch");
  Vec v(n_);
  for (const auto& [key, terms] : sc_) {
    auto [i, j] = key;
    // coefficient of [e_i, e_j] in the bilinear expansion: x_i y_j - x_j y_i
    Fq coeff = f_.sub(f_.mul(x[i - 1], y[j - 1]), f_.mul(x[j - 1], y[i - 1]));
    if (f_.is_zero(coeff)) continue;
    for (const auto& [r, c] : terms) v[r - 1] = f_.add(v[r - 1], f_.mul(coeff, c));
  }
  return v;
}

Mat LieAlgebra::ad(const Vec& x) const {
  Mat m(f_, n_, n_);
  for (int j = 1; j <= n_; ++j) {
    Vec col = bracket(x, basis_vec(f_, n_, j));
    for (int i = 0; i < n_; ++i) m.at(i, j - 1) = col[i];
  }
  return m;
}

Mat ad_power(const LieAlgebra& L, const Vec& x, int e) {
  if (e < 1) throw std::invalid_argument("ad_power exponent must be >= 1");
  return L.ad(x).pow(e);
}

LieAlgebra heisenberg(const Field& f, int m) {
  if (m < 1) throw std::invalid_argument("heisenberg needs m >= 1");
  LieAlgebra L(f, 2 * m + 1);
  for (int i = 1; i <= m; ++i) L.set_bracket(i, m + i, {{2 * m + 1, f.one()}});
  return L;
}

StructureReport structure_report(const LieAlgebra& L) {
  const Field& f = L.field();
  const int n = L.dim();
  StructureReport rep;

  rep.jacobi_ok = true;
  for (int i = 1; i <= n && rep.jacobi_ok; ++i)
    for (int j = i + 1; j <= n && rep.jacobi_ok; ++j)
      for (int k = j + 1; k <= n && rep.jacobi_ok; ++k) {
        Vec s = L.bracket(L.bracket_basis(i, j), basis_vec(f, n, k));
        s = vec_add(f, s, L.bracket(L.bracket_basis(j, k), basis_vec(f, n, i)));
        s = vec_add(f, s, L.bracket(L.bracket_basis(k, i), basis_vec(f, n, j)));
        if (!vec_is_zero(s)) rep.jacobi_ok = false;
      }

  // center: common kernel of all ad(e_i), stacked vertically
  Mat stacked(f, 0, n);
  for (int i = 1; i <= n; ++i) stacked = stacked.vstack(L.ad(basis_vec(f, n, i)));
  for (Vec& v : kernel_basis(stacked)) rep.center.push_back(std::move(v));

  // derived subalgebra: span of all basis brackets
  std::vector<Vec> bracket_images;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec b = L.bracket_basis(i, j);
      if (!vec_is_zero(b)) bracket_images.push_back(std::move(b));
    }
  rep.derived = span_basis(f, bracket_images, n);

  // lower central series
  std::vector<Vec> current;
  for (int i = 1; i <= n; ++i) current.push_back(basis_vec(f, n, i));
  int cls = 0;
  while (!current.empty()) {
    ++cls;
    if (cls > n + 1) {  // series stabilized nonzero: not nilpotent
      rep.nilpotency_class = std::nullopt;
      return rep;
    }
    std::vector<Vec> next;
    for (int i = 1; i <= n; ++i)
      for (const Vec& v : current) {
        Vec b = L.bracket(basis_vec(f, n, i), v);
        if (!vec_is_zero(b)) next.push_back(std::move(b));
      }
    current = span_basis(f, next, n);
  }
  rep.nilpotency_class = cls;
  return rep;
}

}  // namespace resliep
