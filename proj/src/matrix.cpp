#include "resliep/matrix.hpp"

#include <stdexcept>

namespace resliep {

Vec zero_vec(int n) { return Vec(n); }

Vec basis_vec(const Field& f, int n, int i) {
  Vec v(n);
  v[i - 1] = f.one();
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!(x == Fq{})) return false;
  return true;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, const Fq& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

void vec_add_scaled(const Field& f, Vec& a, const Fq& c, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Mat Mat::from_columns(const Field& f, int dim, const std::vector<Vec>& cols) {
  Mat m(f, dim, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::mul(const Mat& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Mat r(f_, rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Fq& a_il = at(i, l);
      if (f_.is_zero(a_il)) continue;
      for (int j = 0; j < b.cols_; ++j)
        r.at(i, j) = f_.add(r.at(i, j), f_.mul(a_il, b.at(l, j)));
    }
  return r;
}

Mat Mat::sub(const Mat& b) const {
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], b.a_[i]);
  return r;
}

Mat Mat::scaled(const Fq& c) const {
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(c, a_[i]);
  return r;
}

Mat Mat::transposed() const {
  Mat r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix power needs a square matrix");
  Mat r = identity(f_, rows_);
  for (int i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix/vector dimension mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Fq acc{};
    for (int j = 0; j < cols_; ++j) acc = f_.add(acc, f_.mul(at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!(x == Fq{})) return false;
  return true;
}

Mat Mat::vstack(const Mat& b) const {
  if (cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
  Mat r(f_, rows_ + b.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = b.at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& b) const {
  if (rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
  Mat r(f_, rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
  }
  return r;
}

Rref rref(Mat m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Fq s = f.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(s, m.at(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      Fq factor = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(m), std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank(); }

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Rref r = rref(m.hstack(Mat::identity(m.field(), m.rows())));
  for (int i = 0; i < m.rows(); ++i)
    if (i >= r.rank() || r.pivot_cols[i] != i)
      throw std::invalid_argument("matrix is singular");
  Mat inv(m.field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = r.m.at(i, m.cols() + j);
  return inv;
}

Fq determinant(Mat m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = m.field();
  Fq det = f.one();
  for (int c = 0; c < m.cols(); ++c) {
    int pivot = -1;
    for (int i = c; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Fq{};
    if (pivot != c) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    Fq s = f.inv(m.at(c, c));
    for (int i = c + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      Fq factor = f.mul(s, m.at(i, c));
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const Field& f = m.field();
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = f.one();
    for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      v[r.pivot_cols[pi]] = f.neg(r.m.at(static_cast<int>(pi), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec reduce_row(const Field& f, const Rref& r, Vec v) {
  for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
    int c = r.pivot_cols[pi];
    if (f.is_zero(v[c])) continue;
    Fq factor = v[c];
    for (size_t j = c; j < v.size(); ++j)
      v[j] = f.sub(v[j], f.mul(factor, r.m.at(static_cast<int>(pi), static_cast<int>(j))));
  }
  return v;
}

int span_rank(const Field& f, const std::vector<Vec>& gens, int dim) {
  if (gens.empty()) return 0;
  (void)dim;
  return rank(Mat::from_rows(f, gens));
}

bool span_contains(const Field& f, const std::vector<Vec>& gens, const Vec& v) {
  if (vec_is_zero(v)) return true;
  if (gens.empty()) return false;
  Rref r = rref(Mat::from_rows(f, gens));
  return vec_is_zero(reduce_row(f, r, v));
}

bool same_span(const Field& f, const std::vector<Vec>& a, const std::vector<Vec>& b,
               int dim) {
  int ra = span_rank(f, a, dim);
  int rb = span_rank(f, b, dim);
  if (ra != rb) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_rank(f, all, dim) == ra;
}

std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& gens, int dim) {
  if (gens.empty()) return {};
  Rref r = rref(Mat::from_rows(f, gens));
  std::vector<Vec> basis;
  for (int i = 0; i < r.rank(); ++i) basis.push_back(r.m.row(i));
  (void)dim;
  return basis;
}

std::vector<Vec> span_intersection(const Field& f, const std::vector<Vec>& a,
                                   const std::vector<Vec>& b, int dim) {
  if (a.empty() || b.empty()) return {};
  // x in span(a) & span(b): x = A^T u = B^T w; solve [A^T | -B^T] (u,w)^T = 0.
  Mat at = Mat::from_rows(f, a).transposed();
  Mat bt = Mat::from_rows(f, b).transposed();
  Mat combined = at.hstack(bt.scaled(f.neg(f.one())));
  std::vector<Vec> result;
  for (const Vec& kv : kernel_basis(combined)) {
    Vec u(kv.begin(), kv.begin() + a.size());
    Vec x = at.apply(u);
    if (!vec_is_zero(x)) result.push_back(std::move(x));
  }
  return span_basis(f, result, dim);
}

std::vector<Vec> quotient_representatives(const Field& f,
                                          const std::vector<Vec>& cocycles,
                                          const std::vector<Vec>& coboundaries,
                                          int dim) {
  (void)dim;
  std::vector<Vec> accepted;
  std::vector<Vec> rows = coboundaries;
  for (const Vec& z : cocycles) {
    Vec w = z;
    if (!rows.empty()) w = reduce_row(f, rref(Mat::from_rows(f, rows)), w);
    if (vec_is_zero(w)) continue;
    // normalize leading coefficient to 1
    for (const Fq& x : w)
      if (!f.is_zero(x)) {
        w = vec_scale(f, f.inv(x), w);
        break;
      }
    rows.push_back(w);
    accepted.push_back(std::move(w));
  }
  return accepted;
}

}  // namespace resliep
