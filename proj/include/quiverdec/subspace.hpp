#pragma once

#include <vector>

#include "quiverdec/matrix.hpp"

namespace quiverdec {

// Subspace of F_p^n stored as its reduced row echelon basis (rows are basis
// vectors, no zero rows).  RREF is unique per subspace, so two subspaces of
// the same ambient space are equal as sets iff they compare equal here,
// bit for bit.
class Subspace {
 public:
  static Subspace zero(PrimeField field, int ambient) {
    return Subspace(ambient, Matrix(field, 0, ambient), {});
  }

  static Subspace full(PrimeField field, int ambient) {
    Matrix id = Matrix::identity(field, ambient);
    std::vector<int> piv(ambient);
    for (int i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(ambient, std::move(id), std::move(piv));
  }

  // Span of the rows of gens.
  static Subspace span(const Matrix& gens) {
    RrefResult rr = rref(gens);
    return Subspace(gens.cols(), std::move(rr.reduced), std::move(rr.pivots));
  }

  static Subspace span(PrimeField field, int ambient,
                       const std::vector<Vec>& gens) {
    Matrix m(field, static_cast<int>(gens.size()), ambient);
    for (size_t r = 0; r < gens.size(); ++r) {
      if (static_cast<int>(gens[r].size()) != ambient)
        throw std::invalid_argument("span: generator length mismatch");
      m.set_row(static_cast<int>(r), gens[r]);
    }
    return span(m);
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const PrimeField& field() const { return basis_.field(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Residual of v after eliminating along the basis; zero iff v lies here.
  Vec reduce(Vec v) const {
    const PrimeField& f = field();
    for (int r = 0; r < basis_.rows(); ++r) {
      u32 c = v[pivots_[r]];
      if (c == 0) continue;
      for (int j = 0; j < ambient_; ++j)
        v[j] = f.sub(v[j], f.mul(c, basis_.at(r, j)));
    }
    return v;
  }

  bool contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("contains: length mismatch");
    for (u32 x : reduce(v))
      if (x != 0) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("contains: ambient mismatch");
    for (int r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  // Coordinates of v in the basis; v must lie in the subspace.  For an RREF
  // basis these are just v's entries at the pivot columns.
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("coordinates: not a member");
    Vec c(dim());
    for (int r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  // Sum of c[t] * basis row t.
  Vec from_coordinates(const Vec& c) const {
    if (static_cast<int>(c.size()) != dim())
      throw std::invalid_argument("from_coordinates: length mismatch");
    const PrimeField& f = field();
    Vec v(ambient_, 0);
    for (int r = 0; r < dim(); ++r) {
      if (c[r] == 0) continue;
      for (int j = 0; j < ambient_; ++j)
        v[j] = f.add(v[j], f.mul(c[r], basis_.at(r, j)));
    }
    return v;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(int ambient, Matrix basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)),
        pivots_(std::move(pivots)) {}

  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

inline void require_same_space(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("subspaces live in different spaces");
}

// f[s] for f acting out of s's ambient space.
inline Subspace image(const Matrix& f, const Subspace& s) {
  if (f.cols() != s.ambient())
    throw std::invalid_argument("image: shape mismatch");
  Matrix gens(f.field(), s.dim(), f.rows());
  for (int r = 0; r < s.dim(); ++r) gens.set_row(r, f.apply(s.basis().row(r)));
  return Subspace::span(gens);
}

inline Subspace image(const Matrix& f) {
  return image(f, Subspace::full(f.field(), f.cols()));
}

inline Subspace kernel(const Matrix& f) {
  RrefResult rr = rref(f);
  const PrimeField& fld = f.field();
  std::vector<bool> is_pivot(f.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (int c = 0; c < f.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(f.cols(), 0);
    v[c] = 1;
    for (int t = 0; t < rr.rank; ++t)
      v[rr.pivots[t]] = fld.neg(rr.reduced.at(t, c));
    gens.push_back(std::move(v));
  }
  return Subspace::span(fld, f.cols(), gens);
}

// f^{-1}[s]: everything mapped into s.
inline Subspace preimage(const Matrix& f, const Subspace& s) {
  if (f.rows() != s.ambient())
    throw std::invalid_argument("preimage: shape mismatch");
  const PrimeField& fld = f.field();
  int n = f.cols(), k = s.dim();
  // Solve f*v = basis^T * c; kernel of [f | -basis^T], then drop the c part.
  Matrix block(fld, f.rows(), n + k);
  for (int r = 0; r < f.rows(); ++r) {
    for (int c = 0; c < n; ++c) block.at(r, c) = f.at(r, c);
    for (int c = 0; c < k; ++c)
      block.at(r, n + c) = fld.neg(s.basis().at(c, r));
  }
  Subspace ker = kernel(block);
  std::vector<Vec> gens;
  for (int r = 0; r < ker.dim(); ++r) {
    Vec full = ker.basis().row(r);
    gens.emplace_back(full.begin(), full.begin() + n);
  }
  return Subspace::span(fld, n, gens);
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  Matrix gens(a.field(), a.dim() + b.dim(), a.ambient());
  for (int r = 0; r < a.dim(); ++r) gens.set_row(r, a.basis().row(r));
  for (int r = 0; r < b.dim(); ++r) gens.set_row(a.dim() + r, b.basis().row(r));
  return Subspace::span(gens);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  const PrimeField& fld = a.field();
  int ka = a.dim(), kb = b.dim();
  // v = a^T x = b^T y: kernel of [a^T | -b^T] gives the compatible (x, y).
  Matrix block(fld, a.ambient(), ka + kb);
  for (int r = 0; r < a.ambient(); ++r) {
    for (int c = 0; c < ka; ++c) block.at(r, c) = a.basis().at(c, r);
    for (int c = 0; c < kb; ++c)
      block.at(r, ka + c) = fld.neg(b.basis().at(c, r));
  }
  Subspace ker = kernel(block);
  std::vector<Vec> gens;
  for (int r = 0; r < ker.dim(); ++r) {
    Vec xy = ker.basis().row(r);
    gens.push_back(a.from_coordinates(Vec(xy.begin(), xy.begin() + ka)));
  }
  return Subspace::span(fld, a.ambient(), gens);
}

// Deterministic complement of inner in outer: extend inner's basis by the
// rows of outer's RREF basis, greedily keeping each row that is independent
// of the span built so far.  The kept rows are themselves an RREF matrix, so
// the result's basis is exactly the kept rows.
inline Subspace complement(const Subspace& inner, const Subspace& outer) {
  require_same_space(inner, outer);
  if (!outer.contains(inner))
    throw std::invalid_argument("complement: inner not inside outer");
  std::vector<Vec> working;  // row echelon, grown incrementally
  std::vector<int> lead;
  const PrimeField& fld = inner.field();
  auto eliminate = [&](Vec v) {
    for (size_t t = 0; t < working.size(); ++t) {
      u32 c = v[lead[t]];
      if (c == 0) continue;
      for (int j = 0; j < inner.ambient(); ++j)
        v[j] = fld.sub(v[j], fld.mul(c, working[t][j]));
    }
    return v;
  };
  auto insert = [&](Vec v) {
    int l = 0;
    while (v[l] == 0) ++l;
    u32 inv = fld.inv(v[l]);
    for (int j = 0; j < inner.ambient(); ++j) v[j] = fld.mul(v[j], inv);
    lead.push_back(l);
    working.push_back(std::move(v));
  };
  for (int r = 0; r < inner.dim(); ++r) insert(inner.basis().row(r));
  std::vector<Vec> chosen;
  for (int r = 0; r < outer.dim(); ++r) {
    Vec res = eliminate(outer.basis().row(r));
    bool nonzero = false;
    for (u32 x : res) nonzero |= (x != 0);
    if (!nonzero) continue;
    chosen.push_back(outer.basis().row(r));
    insert(std::move(res));
  }
  return Subspace::span(fld, inner.ambient(), chosen);
}

}  // namespace quiverdec
