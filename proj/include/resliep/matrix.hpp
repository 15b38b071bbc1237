#ifndef RESLIEP_MATRIX_HPP
#define RESLIEP_MATRIX_HPP

#include <vector>

#include "resliep/field.hpp"

namespace resliep {

using Vec = std::vector<Fq>;

Vec zero_vec(int n);
Vec basis_vec(const Field& f, int n, int i);  // 1-based index
bool vec_is_zero(const Vec& v);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Fq& c, const Vec& a);
void vec_add_scaled(const Field& f, Vec& a, const Fq& c, const Vec& b);  // a += c*b

/// Dense matrix over a fixed field, row-major.
class Mat {
 public:
  Mat(const Field& f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(const Field& f, int n);
  static Mat from_columns(const Field& f, int dim, const std::vector<Vec>& cols);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  Fq& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Fq& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  Mat mul(const Mat& b) const;
  Mat sub(const Mat& b) const;
  Mat scaled(const Fq& c) const;
  Mat transposed() const;
  Mat pow(int e) const;  // square matrices
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  /// Stack rows of b below this (same column count).
  Mat vstack(const Mat& b) const;
  /// Columns of b appended to the right (same row count).
  Mat hstack(const Mat& b) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field f_;
  int rows_, cols_;
  std::vector<Fq> a_;
};

/// Reduced row echelon form; unique for a given row space.
struct Rref {
  Mat m;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(Mat m);
int rank(const Mat& m);
bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);  // throws std::invalid_argument if singular
Fq determinant(Mat m);      // square matrices

/// Kernel of m acting on column vectors; one basis vector per free column,
/// in ascending free-column order.
std::vector<Vec> kernel_basis(const Mat& m);

/// Reduce v against the rows of an RREF (row-space elimination).
Vec reduce_row(const Field& f, const Rref& r, Vec v);

// Span utilities: a subspace is handed around as a list of spanning vectors.
int span_rank(const Field& f, const std::vector<Vec>& gens, int dim);
bool span_contains(const Field& f, const std::vector<Vec>& gens, const Vec& v);
bool same_span(const Field& f, const std::vector<Vec>& a, const std::vector<Vec>& b,
               int dim);
std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& gens, int dim);
std::vector<Vec> span_intersection(const Field& f, const std::vector<Vec>& a,
                                   const std::vector<Vec>& b, int dim);

/// Representatives of span(cocycles) modulo span(coboundaries): kernel vectors
/// that enlarge the coboundary row space, reduced against everything accepted
/// so far. Deterministic and canonical for fixed input order.
std::vector<Vec> quotient_representatives(const Field& f,
                                          const std::vector<Vec>& cocycles,
                                          const std::vector<Vec>& coboundaries,
                                          int dim);

}  // namespace resliep

#endif
