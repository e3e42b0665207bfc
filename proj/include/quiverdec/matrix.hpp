#pragma once

#include <utility>
#include <vector>

#include "quiverdec/errors.hpp"
#include "quiverdec/field.hpp"

namespace quiverdec {

using Vec = std::vector<u32>;

// Dense matrix over F_p, row-major.  A map between coordinate spaces has
// shape (target dim) x (source dim) and acts on column vectors.
class Matrix {
 public:
  Matrix(PrimeField field, int rows, int cols)
      : rows_(rows), cols_(cols), field_(field),
        a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
  }

  static Matrix identity(PrimeField field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  u32& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  u32 at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec row(int r) const {
    return Vec(a_.begin() + static_cast<size_t>(r) * cols_,
               a_.begin() + static_cast<size_t>(r + 1) * cols_);
  }

  void set_row(int r, const Vec& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  // this * v, v of length cols().
  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("apply: length mismatch");
    Vec out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
      u64 acc = 0;
      for (int c = 0; c < cols_; ++c)
        acc += static_cast<u64>(at(r, c)) * v[c];
      out[r] = static_cast<u32>(acc % field_.p());
    }
    return out;
  }

  Matrix mul(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("mul: shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        u32 f = at(r, k);
        if (f == 0) continue;
        for (int c = 0; c < rhs.cols_; ++c)
          out.at(r, c) = field_.add(out.at(r, c), field_.mul(f, rhs.at(k, c)));
      }
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  void scale_row(int r, u32 f) {
    for (int c = 0; c < cols_; ++c) at(r, c) = field_.mul(at(r, c), f);
  }

  // row i -= f * row j
  void axpy_row(int i, int j, u32 f) {
    for (int c = 0; c < cols_; ++c)
      at(i, c) = field_.sub(at(i, c), field_.mul(f, at(j, c)));
  }

  void truncate_rows(int n) {
    rows_ = n;
    a_.resize(static_cast<size_t>(n) * cols_);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_, cols_;
  PrimeField field_;
  std::vector<u32> a_;
};

struct RrefResult {
  Matrix reduced;  // unique RREF of the input's row space, zero rows dropped
  std::vector<int> pivots;
  int rank = 0;
};

inline RrefResult rref(Matrix m) {
  const PrimeField f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    m.scale_row(r, f.inv(m.at(r, c)));
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && m.at(i, c) != 0) m.axpy_row(i, r, m.at(i, c));
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return {std::move(m), std::move(pivots), r};
}

// Deterministic solution of f * x = y: row-reduce the augmented system and
// set every free (non-pivot) coordinate to zero.
inline Vec solve_lift(const Matrix& f, const Vec& y) {
  if (static_cast<int>(y.size()) != f.rows())
    throw std::invalid_argument("solve_lift: length mismatch");
  Matrix aug(f.field(), f.rows(), f.cols() + 1);
  for (int r = 0; r < f.rows(); ++r) {
    for (int c = 0; c < f.cols(); ++c) aug.at(r, c) = f.at(r, c);
    aug.at(r, f.cols()) = y[r];
  }
  RrefResult rr = rref(std::move(aug));
  Vec x(f.cols(), 0);
  for (int t = 0; t < rr.rank; ++t) {
    if (rr.pivots[t] == f.cols())
      throw NoSolutionError("solve_lift: inconsistent system");
    x[rr.pivots[t]] = rr.reduced.at(t, f.cols());
  }
  return x;
}

}  // namespace quiverdec
