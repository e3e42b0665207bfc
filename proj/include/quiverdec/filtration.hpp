#pragma once

#include <utility>
#include <vector>

#include "quiverdec/representation.hpp"

namespace quiverdec {

// The two boundary subreps attached to a window arrow e: everything on and
// behind the target of e (v_plus), and everything that dies at e (v_minus).
// Both are full or zero on one side of e and transported stepwise on the
// other, so both are closed under the maps.

inline SubrepVector v_plus(const Representation& r, int pos) {
  const QuiverSpec& q = r.quiver;
  if (pos < q.lo || pos >= q.hi)
    throw std::invalid_argument("v_plus: not a window arrow");
  ArrowDir d = q.dir(pos);
  int t = d == ArrowDir::R ? pos + 1 : pos;  // target vertex of e
  std::vector<Subspace> vals(q.length(), Subspace::zero(r.field, 0));
  auto set = [&](int v, Subspace s) { vals[v - q.lo] = std::move(s); };
  auto get = [&](int v) -> const Subspace& { return vals[v - q.lo]; };
  if (d == ArrowDir::R) {
    for (int v = q.lo; v <= t; ++v) set(v, Subspace::full(r.field, r.dim_at(v)));
    for (int v = t + 1; v <= q.hi; ++v)
      set(v, transport_step(r, v - 1, v, get(v - 1)));
  } else {
    for (int v = t; v <= q.hi; ++v) set(v, Subspace::full(r.field, r.dim_at(v)));
    for (int v = t - 1; v >= q.lo; --v)
      set(v, transport_step(r, v + 1, v, get(v + 1)));
  }
  return make_subrep(r, std::move(vals));
}

inline SubrepVector v_minus(const Representation& r, int pos) {
  const QuiverSpec& q = r.quiver;
  if (pos < q.lo || pos >= q.hi)
    throw std::invalid_argument("v_minus: not a window arrow");
  ArrowDir d = q.dir(pos);
  int t = d == ArrowDir::R ? pos + 1 : pos;
  std::vector<Subspace> vals(q.length(), Subspace::zero(r.field, 0));
  auto set = [&](int v, Subspace s) { vals[v - q.lo] = std::move(s); };
  auto get = [&](int v) -> const Subspace& { return vals[v - q.lo]; };
  if (d == ArrowDir::R) {
    for (int v = t; v <= q.hi; ++v) set(v, Subspace::zero(r.field, r.dim_at(v)));
    for (int v = t - 1; v >= q.lo; --v)
      set(v, transport_step(r, v + 1, v, get(v + 1)));
  } else {
    for (int v = q.lo; v <= t; ++v) set(v, Subspace::zero(r.field, r.dim_at(v)));
    for (int v = t + 1; v <= q.hi; ++v)
      set(v, transport_step(r, v - 1, v, get(v - 1)));
  }
  return make_subrep(r, std::move(vals));
}

// Tail counterpart of v_minus: what dies entering the tail.  On a zero tail
// everything dies at the window edge; on a constant tail nothing does, the
// seed is the kernel of the identity.
inline SubrepVector v_minus_left_tail(const Representation& r) {
  const QuiverSpec& q = r.quiver;
  Subspace seed = q.left_tail == TailMode::Constant
                      ? Subspace::zero(r.field, r.dim_at(q.lo))
                      : Subspace::full(r.field, r.dim_at(q.lo));
  std::vector<Subspace> vals(q.length(), Subspace::zero(r.field, 0));
  vals[0] = std::move(seed);
  for (int v = q.lo + 1; v <= q.hi; ++v)
    vals[v - q.lo] = transport_step(r, v - 1, v, vals[v - 1 - q.lo]);
  return make_subrep(r, std::move(vals));
}

inline SubrepVector v_minus_right_tail(const Representation& r) {
  const QuiverSpec& q = r.quiver;
  Subspace seed = q.right_tail == TailMode::Constant
                      ? Subspace::zero(r.field, r.dim_at(q.hi))
                      : Subspace::full(r.field, r.dim_at(q.hi));
  std::vector<Subspace> vals(q.length(), Subspace::zero(r.field, 0));
  vals[q.hi - q.lo] = std::move(seed);
  for (int v = q.hi - 1; v >= q.lo; --v)
    vals[v - q.lo] = transport_step(r, v + 1, v, vals[v + 1 - q.lo]);
  return make_subrep(r, std::move(vals));
}

// Value at the order sentinel: the whole fibre at the window edge,
// transported inward.
inline SubrepVector v_virtual_left(const Representation& r) {
  return saturate(r, r.quiver.lo,
                  Subspace::full(r.field, r.dim_at(r.quiver.lo)));
}

inline SubrepVector v_virtual_right(const Representation& r) {
  return saturate(r, r.quiver.hi,
                  Subspace::full(r.field, r.dim_at(r.quiver.hi)));
}

struct FiltrationEntry {
  Boundary boundary;
  OrderKey key;
  SubrepVector value;
};

// One of the two filtrations, stored as entries ascending in the arrow
// order.  Values ascend too: each entry's subrep contains its predecessor.
struct FiltrationTable {
  std::vector<FiltrationEntry> entries;

  int index_of(const Boundary& b) const {
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i].boundary == b) return static_cast<int>(i);
    throw InvariantError("filtration table: unknown boundary");
  }

  const SubrepVector& at(const Boundary& b) const {
    return entries[index_of(b)].value;
  }

  // Strictly preceding value in the order, if any.
  const SubrepVector* pred(const Boundary& b) const {
    int i = index_of(b);
    return i == 0 ? nullptr : &entries[i - 1].value;
  }
};

namespace detail {
inline void check_ascending(const FiltrationTable& t) {
  for (size_t i = 0; i + 1 < t.entries.size(); ++i) {
    if (!(t.entries[i].key < t.entries[i + 1].key))
      throw InvariantError("filtration table: keys not strictly ascending");
    if (!contains(t.entries[i + 1].value, t.entries[i].value))
      throw InvariantError("filtration table: values not ascending");
  }
}
}  // namespace detail

// Left filtration: indexed by the left arrow order.  Arrows assign what
// their target side sees: a right-pointing arrow contributes v_plus, a
// left-pointing one v_minus; the tail representative on the left dies into
// the tail, the one on the right caps the order with everything.
inline FiltrationTable build_filtration_L(const Representation& r) {
  const QuiverSpec& q = r.quiver;
  FiltrationTable t;
  auto add = [&](const Boundary& b, SubrepVector v) {
    t.entries.push_back({b, order_key_L(b), std::move(v)});
  };
  for (int pos = q.lo; pos < q.hi; ++pos) {
    Boundary b = Boundary::arrow(pos, q.dir(pos));
    add(b, q.dir(pos) == ArrowDir::R ? v_plus(r, pos) : v_minus(r, pos));
  }
  add(Boundary::left_tail(), v_minus_left_tail(r));
  add(Boundary::right_tail(), full_subrep(r));
  add(Boundary::left_virtual(), v_virtual_left(r));
  std::sort(t.entries.begin(), t.entries.end(),
            [](const FiltrationEntry& a, const FiltrationEntry& b) {
              return a.key < b.key;
            });
  detail::check_ascending(t);
  return t;
}

// Mirror image of build_filtration_L.
inline FiltrationTable build_filtration_R(const Representation& r) {
  const QuiverSpec& q = r.quiver;
  FiltrationTable t;
  auto add = [&](const Boundary& b, SubrepVector v) {
    t.entries.push_back({b, order_key_R(b), std::move(v)});
  };
  for (int pos = q.lo; pos < q.hi; ++pos) {
    Boundary b = Boundary::arrow(pos, q.dir(pos));
    add(b, q.dir(pos) == ArrowDir::L ? v_plus(r, pos) : v_minus(r, pos));
  }
  add(Boundary::right_tail(), v_minus_right_tail(r));
  add(Boundary::left_tail(), full_subrep(r));
  add(Boundary::right_virtual(), v_virtual_right(r));
  std::sort(t.entries.begin(), t.entries.end(),
            [](const FiltrationEntry& a, const FiltrationEntry& b) {
              return a.key < b.key;
            });
  detail::check_ascending(t);
  return t;
}

struct FiltrationPair {
  FiltrationTable left;
  FiltrationTable right;
};

inline FiltrationPair build_filtrations(const Representation& r) {
  return {build_filtration_L(r), build_filtration_R(r)};
}

// F at alpha: meet of the two filtration values at alpha's boundary pair.
inline SubrepVector f_alpha(const Representation& r, const FiltrationPair& f,
                            const Interval& alpha) {
  auto [bl, br] = iota(r.quiver, alpha);
  return intersect(r, f.left.at(bl), f.right.at(br));
}

// F strictly below alpha: the union of F over everything smaller.  Stepping
// one boundary down on either side already gives the supremum, so two terms
// suffice; a missing predecessor contributes nothing.
inline SubrepVector f_strictly_below(const Representation& r,
                                     const FiltrationPair& f,
                                     const Interval& alpha) {
  auto [bl, br] = iota(r.quiver, alpha);
  SubrepVector out = zero_subrep(r);
  if (const SubrepVector* rp = f.right.pred(br))
    out = sum(r, out, intersect(r, f.left.at(bl), *rp));
  if (const SubrepVector* lp = f.left.pred(bl))
    out = sum(r, out, intersect(r, *lp, f.right.at(br)));
  return out;
}

}  // namespace quiverdec
