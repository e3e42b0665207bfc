#pragma once

#include <compare>
#include <limits>
#include <string>
#include <vector>

#include "quiverdec/errors.hpp"

namespace quiverdec {

enum class ArrowDir { R, L };
enum class TailMode { Zero, Constant };

// Finite window [lo, hi] of the doubly infinite path quiver.  Arrow a_i
// joins vertices x_i and x_{i+1}; orientation[i - lo] gives its direction
// (R: source x_i, L: source x_{i+1}).  Outside the window both tails extend
// forever: a Zero tail carries zero spaces, a Constant tail repeats the edge
// space along identity maps.  Tail arrows always point away from the window.
struct QuiverSpec {
  int lo = 0;
  int hi = 0;
  std::vector<ArrowDir> orientation;  // arrows a_lo .. a_{hi-1}
  TailMode left_tail = TailMode::Zero;
  TailMode right_tail = TailMode::Zero;

  int length() const { return hi - lo + 1; }
  int arrows() const { return hi - lo; }

  // Direction of a_pos for any integer position, tail arrows included.
  ArrowDir dir(int pos) const {
    if (pos < lo) return ArrowDir::L;
    if (pos >= hi) return ArrowDir::R;
    return orientation[pos - lo];
  }

  friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;
};

inline void validate_quiver(const QuiverSpec& q) {
  if (q.lo > q.hi) throw std::invalid_argument("window is empty");
  if (static_cast<int>(q.orientation.size()) != q.arrows())
    throw std::invalid_argument("orientation length must be hi - lo");
}

// Interval of vertices.  left is a window vertex or neg_inf, right a window
// vertex or pos_inf; the sentinel values sort naturally, so default
// comparison is already (left, right)-lexicographic.
struct Interval {
  static constexpr int neg_inf = std::numeric_limits<int>::min();
  static constexpr int pos_inf = std::numeric_limits<int>::max();

  int left = 0;
  int right = 0;

  bool contains(int v) const { return left <= v && v <= right; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// The intervals a representation on q can decompose into: finite endpoints
// range over the window, an infinite endpoint exists only on a Constant
// tail.  Returned sorted by (left, right).
inline std::vector<Interval> enumerate_intervals(const QuiverSpec& q) {
  std::vector<int> lefts, rights;
  if (q.left_tail == TailMode::Constant) lefts.push_back(Interval::neg_inf);
  for (int v = q.lo; v <= q.hi; ++v) lefts.push_back(v);
  for (int v = q.lo; v <= q.hi; ++v) rights.push_back(v);
  if (q.right_tail == TailMode::Constant) rights.push_back(Interval::pos_inf);
  std::vector<Interval> out;
  for (int l : lefts)
    for (int r : rights)
      if (l <= r) out.push_back({l, r});
  return out;
}

inline bool is_effective_interval(const QuiverSpec& q, const Interval& a) {
  if (a.left == Interval::neg_inf) {
    if (q.left_tail != TailMode::Constant) return false;
  } else if (a.left < q.lo || a.left > q.hi) {
    return false;
  }
  if (a.right == Interval::pos_inf) {
    if (q.right_tail != TailMode::Constant) return false;
  } else if (a.right < q.lo || a.right > q.hi) {
    return false;
  }
  return a.left <= a.right;
}

// A point of one of the two arrow orders.  All tail arrows on one side share
// their transported value, so one representative per side stands in for the
// whole ray; the two virtual symbols are the order sentinels.
enum class BoundaryKind { Arrow, LeftTail, RightTail, LeftVirtual, RightVirtual };

struct Boundary {
  BoundaryKind kind = BoundaryKind::Arrow;
  int position = 0;              // literal arrows only
  ArrowDir dir = ArrowDir::R;

  static Boundary arrow(int pos, ArrowDir d) {
    return {BoundaryKind::Arrow, pos, d};
  }
  static Boundary left_tail() {
    return {BoundaryKind::LeftTail, 0, ArrowDir::L};
  }
  static Boundary right_tail() {
    return {BoundaryKind::RightTail, 0, ArrowDir::R};
  }
  static Boundary left_virtual() {
    return {BoundaryKind::LeftVirtual, 0, ArrowDir::L};
  }
  static Boundary right_virtual() {
    return {BoundaryKind::RightVirtual, 0, ArrowDir::R};
  }

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct OrderKey {
  int cls = 0;
  long long pos = 0;
  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

inline constexpr long long kTailKey = std::numeric_limits<long long>::max();

// Left order: left-pointing arrows sit below the left-virtual sentinel,
// right-pointing arrows above it.  Within one orientation class, "behind"
// is smaller: right-pointing arrows ascend with position, left-pointing
// ones descend.  Tail representatives cap their class.
inline OrderKey order_key_L(const Boundary& b) {
  switch (b.kind) {
    case BoundaryKind::Arrow:
      return b.dir == ArrowDir::L ? OrderKey{0, -static_cast<long long>(b.position)}
                                  : OrderKey{2, b.position};
    case BoundaryKind::LeftTail:
      return {0, kTailKey};
    case BoundaryKind::LeftVirtual:
      return {1, 0};
    case BoundaryKind::RightTail:
      return {2, kTailKey};
    case BoundaryKind::RightVirtual:
      break;
  }
  throw std::invalid_argument("right virtual symbol has no left-order key");
}

// Mirror image of order_key_L.
inline OrderKey order_key_R(const Boundary& b) {
  switch (b.kind) {
    case BoundaryKind::Arrow:
      return b.dir == ArrowDir::R ? OrderKey{0, b.position}
                                  : OrderKey{2, -static_cast<long long>(b.position)};
    case BoundaryKind::RightTail:
      return {0, kTailKey};
    case BoundaryKind::RightVirtual:
      return {1, 0};
    case BoundaryKind::LeftTail:
      return {2, kTailKey};
    case BoundaryKind::LeftVirtual:
      break;
  }
  throw std::invalid_argument("left virtual symbol has no right-order key");
}

// Boundary pair of an interval: the arrow just outside each endpoint, with
// positions outside the window collapsed to the tail representatives and
// infinite endpoints mapped to the virtual sentinels.
inline std::pair<Boundary, Boundary> iota(const QuiverSpec& q,
                                          const Interval& a) {
  if (!is_effective_interval(q, a))
    throw std::invalid_argument("interval not effective for this quiver");
  Boundary left = Boundary::left_virtual();
  if (a.left != Interval::neg_inf) {
    left = a.left == q.lo ? Boundary::left_tail()
                          : Boundary::arrow(a.left - 1, q.dir(a.left - 1));
  }
  Boundary right = Boundary::right_virtual();
  if (a.right != Interval::pos_inf) {
    right = a.right == q.hi ? Boundary::right_tail()
                            : Boundary::arrow(a.right, q.dir(a.right));
  }
  return {left, right};
}

// Interval order: componentwise comparison of the boundary pair under the
// two arrow orders.  iota is an order embedding, so this is a partial order.
inline bool leq(const QuiverSpec& q, const Interval& a, const Interval& b) {
  auto [al, ar] = iota(q, a);
  auto [bl, br] = iota(q, b);
  return order_key_L(al) <= order_key_L(bl) && order_key_R(ar) <= order_key_R(br);
}

namespace detail {
// Effective arrow positions inside a: window arrows plus at most one tail
// representative per side (position lo-1 or hi).
inline std::pair<int, int> inner_arrow_range(const QuiverSpec& q,
                                             const Interval& a) {
  int jmin = a.left == Interval::neg_inf ? q.lo - 1 : a.left;
  int jmax = a.right == Interval::pos_inf ? q.hi : a.right - 1;
  if (jmin < q.lo - 1) jmin = q.lo - 1;
  if (jmax > q.hi) jmax = q.hi;
  return {jmin, jmax};
}
}  // namespace detail

// b arises from a by cutting at an arrow inside a and keeping the portion
// behind it.
inline bool is_reduction(const QuiverSpec& q, const Interval& a,
                         const Interval& b) {
  if (!is_effective_interval(q, a) || !is_effective_interval(q, b))
    return false;
  auto [jmin, jmax] = detail::inner_arrow_range(q, a);
  for (int j = jmin; j <= jmax; ++j) {
    if (q.dir(j) == ArrowDir::R) {
      if (b == Interval{a.left, j}) return true;
    } else {
      if (b == Interval{j + 1, a.right}) return true;
    }
  }
  return false;
}

// b extends a across one of a's boundary arrows that points toward a; the
// portion of b in front of that arrow is exactly a.
inline bool is_enhancement(const QuiverSpec& q, const Interval& a,
                           const Interval& b) {
  if (!is_effective_interval(q, a) || !is_effective_interval(q, b))
    return false;
  if (a.left != Interval::neg_inf && a.left > q.lo && b.right == a.right &&
      b.left < a.left && q.dir(a.left - 1) == ArrowDir::R)
    return true;
  if (a.right != Interval::pos_inf && a.right < q.hi && b.left == a.left &&
      b.right > a.right && q.dir(a.right) == ArrowDir::L)
    return true;
  return false;
}

inline std::string endpoint_to_string(int v) {
  if (v == Interval::neg_inf) return "-inf";
  if (v == Interval::pos_inf) return "+inf";
  return std::to_string(v);
}

}  // namespace quiverdec
