#pragma once

#include <vector>

#include "quiverdec/matrix.hpp"
#include "quiverdec/subspace.hpp"

namespace testutil {

// Build a matrix from row literals; entries may be any integers.
inline quiverdec::Matrix make_mat(const quiverdec::PrimeField& f,
                                  const std::vector<std::vector<long long>>& rows,
                                  int cols = -1) {
  int r = static_cast<int>(rows.size());
  int c = cols >= 0 ? cols : (r > 0 ? static_cast<int>(rows[0].size()) : 0);
  quiverdec::Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = f.reduce(rows[i][j]);
  return m;
}

inline quiverdec::Vec make_vec(const quiverdec::PrimeField& f,
                               const std::vector<long long>& v) {
  quiverdec::Vec out;
  for (long long x : v) out.push_back(f.reduce(x));
  return out;
}

inline quiverdec::Subspace make_span(const quiverdec::PrimeField& f, int ambient,
                                     const std::vector<std::vector<long long>>& gens) {
  std::vector<quiverdec::Vec> rows;
  for (const auto& g : gens) rows.push_back(make_vec(f, g));
  return quiverdec::Subspace::span(f, ambient, rows);
}

// Every subspace of F_p^ambient, found by spanning all subsets of the
// nonzero vectors.  Only sane for tiny p^ambient.
inline std::vector<quiverdec::Subspace> all_subspaces(const quiverdec::PrimeField& f,
                                                      int ambient) {
  using namespace quiverdec;
  std::vector<Vec> nonzero;
  u64 total = 1;
  for (int i = 0; i < ambient; ++i) total *= f.p();
  for (u64 code = 1; code < total; ++code) {
    Vec v(ambient);
    u64 rest = code;
    for (int i = 0; i < ambient; ++i) {
      v[i] = static_cast<u32>(rest % f.p());
      rest /= f.p();
    }
    nonzero.push_back(std::move(v));
  }
  std::vector<Subspace> out{Subspace::zero(f, ambient)};
  for (u64 mask = 1; mask < (u64{1} << nonzero.size()); ++mask) {
    std::vector<Vec> gens;
    for (size_t i = 0; i < nonzero.size(); ++i)
      if (mask & (u64{1} << i)) gens.push_back(nonzero[i]);
    Subspace s = Subspace::span(f, ambient, gens);
    bool seen = false;
    for (const auto& t : out) seen |= (t == s);
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace testutil
