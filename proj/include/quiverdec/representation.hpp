#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverdec/quiver.hpp"
#include "quiverdec/subspace.hpp"

namespace quiverdec {

// Finite-window presentation of a representation of the infinite path
// quiver.  dims and maps cover the window; the tails extend per the quiver's
// tail modes (zero spaces, or constant copies of the edge space along
// identity maps).  maps[i] has shape dims[target] x dims[source].
struct Representation {
  QuiverSpec quiver;
  PrimeField field;
  std::vector<int> dims;     // per window vertex lo..hi
  std::vector<Matrix> maps;  // per window arrow a_lo..a_{hi-1}

  int dim_at(int v) const { return dims[v - quiver.lo]; }
  const Matrix& map_at(int pos) const { return maps[pos - quiver.lo]; }

  // Dimension at any vertex of the infinite quiver.
  int dim_ext(int v) const {
    if (v < quiver.lo)
      return quiver.left_tail == TailMode::Zero ? 0 : dims.front();
    if (v > quiver.hi)
      return quiver.right_tail == TailMode::Zero ? 0 : dims.back();
    return dim_at(v);
  }

  // Map of arrow a_pos for any position, tail arrows included.
  Matrix map_ext(int pos) const {
    if (pos >= quiver.lo && pos < quiver.hi) return map_at(pos);
    bool left = pos < quiver.lo;
    TailMode mode = left ? quiver.left_tail : quiver.right_tail;
    if (mode == TailMode::Constant)
      return Matrix::identity(field, left ? dims.front() : dims.back());
    // Zero tail: source and target dims follow dim_ext; the map is zero.
    int src = dim_ext(pos + (quiver.dir(pos) == ArrowDir::R ? 0 : 1));
    int tgt = dim_ext(pos + (quiver.dir(pos) == ArrowDir::R ? 1 : 0));
    return Matrix(field, tgt, src);
  }

  friend bool operator==(const Representation&, const Representation&) = default;
};

inline void validate_representation(const Representation& r) {
  validate_quiver(r.quiver);
  if (static_cast<int>(r.dims.size()) != r.quiver.length())
    throw std::invalid_argument("dims length must be hi - lo + 1");
  for (int d : r.dims)
    if (d < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(r.maps.size()) != r.quiver.arrows())
    throw std::invalid_argument("maps length must be hi - lo");
  for (int pos = r.quiver.lo; pos < r.quiver.hi; ++pos) {
    const Matrix& f = r.map_at(pos);
    bool right = r.quiver.dir(pos) == ArrowDir::R;
    int src = r.dim_at(right ? pos : pos + 1);
    int tgt = r.dim_at(right ? pos + 1 : pos);
    if (f.rows() != tgt || f.cols() != src)
      throw std::invalid_argument("map shape mismatch at arrow " +
                                  std::to_string(pos));
    if (!(f.field() == r.field))
      throw std::invalid_argument("map modulus mismatch");
  }
}

// One step of transport between adjacent vertices: image across a
// consistently oriented arrow, preimage across an opposing one.  Positions
// may lie in the tails.
inline Subspace transport_step(const Representation& r, int from, int to,
                               const Subspace& s) {
  if (to != from + 1 && to != from - 1)
    throw std::invalid_argument("transport_step: vertices not adjacent");
  int pos = std::min(from, to);
  Matrix f = r.map_ext(pos);
  bool arrow_right = r.quiver.dir(pos) == ArrowDir::R;
  bool walk_right = to > from;
  if (arrow_right == walk_right) return image(f, s);
  return preimage(f, s);
}

// Transport of s from one vertex to another along the unique walk.
inline Subspace transport(const Representation& r, int from, int to,
                          const Subspace& s) {
  if (s.ambient() != r.dim_ext(from))
    throw std::invalid_argument("transport: ambient mismatch at source");
  Subspace cur = s;
  for (int v = from; v != to; v += (to > from ? 1 : -1))
    cur = transport_step(r, v, v + (to > from ? 1 : -1), cur);
  return cur;
}

// Per-vertex subspaces of a representation, closed under the maps.  Only
// window values are materialized; the tail values are determined (zero
// spaces on a Zero tail, a constant copy of the window-edge value on a
// Constant tail).
enum class TailMarker { ZeroTail, StableCopy };

struct SubrepVector {
  TailMarker left_tail = TailMarker::ZeroTail;
  TailMarker right_tail = TailMarker::ZeroTail;
  std::vector<Subspace> values;  // per window vertex lo..hi

  const Subspace& at(int v, const QuiverSpec& q) const {
    return values[v - q.lo];
  }

  friend bool operator==(const SubrepVector&, const SubrepVector&) = default;
};

namespace detail {
inline TailMarker marker_of(TailMode m) {
  return m == TailMode::Zero ? TailMarker::ZeroTail : TailMarker::StableCopy;
}
}  // namespace detail

inline SubrepVector make_subrep(const Representation& r,
                                std::vector<Subspace> values) {
  return {detail::marker_of(r.quiver.left_tail),
          detail::marker_of(r.quiver.right_tail), std::move(values)};
}

inline SubrepVector zero_subrep(const Representation& r) {
  std::vector<Subspace> v;
  for (int d : r.dims) v.push_back(Subspace::zero(r.field, d));
  return make_subrep(r, std::move(v));
}

inline SubrepVector full_subrep(const Representation& r) {
  std::vector<Subspace> v;
  for (int d : r.dims) v.push_back(Subspace::full(r.field, d));
  return make_subrep(r, std::move(v));
}

inline SubrepVector intersect(const Representation& r, const SubrepVector& a,
                              const SubrepVector& b) {
  std::vector<Subspace> v;
  for (size_t i = 0; i < a.values.size(); ++i)
    v.push_back(intersect(a.values[i], b.values[i]));
  return make_subrep(r, std::move(v));
}

inline SubrepVector sum(const Representation& r, const SubrepVector& a,
                        const SubrepVector& b) {
  std::vector<Subspace> v;
  for (size_t i = 0; i < a.values.size(); ++i)
    v.push_back(sum(a.values[i], b.values[i]));
  return make_subrep(r, std::move(v));
}

inline bool contains(const SubrepVector& big, const SubrepVector& small) {
  for (size_t i = 0; i < big.values.size(); ++i)
    if (!big.values[i].contains(small.values[i])) return false;
  return true;
}

// Closure under every window arrow; tail arrows are closed automatically
// (identity maps between equal values, or zero spaces).
inline bool is_map_closed(const Representation& r, const SubrepVector& s) {
  for (int pos = r.quiver.lo; pos < r.quiver.hi; ++pos) {
    bool right = r.quiver.dir(pos) == ArrowDir::R;
    const Subspace& src = s.at(right ? pos : pos + 1, r.quiver);
    const Subspace& tgt = s.at(right ? pos + 1 : pos, r.quiver);
    if (!tgt.contains(image(r.map_at(pos), src))) return false;
  }
  return true;
}

// Transport of s everywhere from the given vertex: the largest map-closed
// vector that agrees with s there and stays surjective along arrows
// pointing away from that vertex.
inline SubrepVector saturate(const Representation& r, int vertex,
                             const Subspace& s) {
  if (vertex < r.quiver.lo || vertex > r.quiver.hi)
    throw std::invalid_argument("saturate: vertex outside window");
  if (s.ambient() != r.dim_at(vertex))
    throw std::invalid_argument("saturate: ambient mismatch");
  std::vector<Subspace> v(r.quiver.length(),
                          Subspace::zero(r.field, 0));
  v[vertex - r.quiver.lo] = s;
  for (int t = vertex + 1; t <= r.quiver.hi; ++t)
    v[t - r.quiver.lo] = transport_step(r, t - 1, t, v[t - 1 - r.quiver.lo]);
  for (int t = vertex - 1; t >= r.quiver.lo; --t)
    v[t - r.quiver.lo] = transport_step(r, t + 1, t, v[t + 1 - r.quiver.lo]);
  return make_subrep(r, std::move(v));
}

// Deterministic pseudo-random instance; identical arguments give identical
// representations.  Window is [0, window_len - 1].
inline Representation random_representation(int window_len, int max_dim,
                                            u32 p, TailMode left_tail,
                                            TailMode right_tail, u64 seed) {
  if (window_len < 1) throw std::invalid_argument("window_len must be >= 1");
  if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
  PrimeField field(p);
  std::mt19937_64 rng(seed);
  auto draw = [&](u64 n) { return static_cast<u32>(rng() % n); };
  QuiverSpec q;
  q.lo = 0;
  q.hi = window_len - 1;
  q.left_tail = left_tail;
  q.right_tail = right_tail;
  for (int i = 0; i < window_len - 1; ++i)
    q.orientation.push_back(draw(2) == 0 ? ArrowDir::R : ArrowDir::L);
  std::vector<int> dims;
  for (int i = 0; i < window_len; ++i)
    dims.push_back(static_cast<int>(draw(static_cast<u64>(max_dim) + 1)));
  std::vector<Matrix> maps;
  for (int i = 0; i < window_len - 1; ++i) {
    bool right = q.orientation[i] == ArrowDir::R;
    Matrix m(field, dims[right ? i + 1 : i], dims[right ? i : i + 1]);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) = draw(p);
    maps.push_back(std::move(m));
  }
  Representation rep{q, field, std::move(dims), std::move(maps)};
  validate_representation(rep);
  return rep;
}

namespace detail {

inline nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j, const PrimeField& f,
                               int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(where + ": expected " + std::to_string(cols) +
                       " entries per row");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer())
        throw ParseError(where + ": matrix entries must be integers");
      m.at(r, c) = f.reduce(row[c].get<i64>());
    }
  }
  return m;
}

inline std::string tail_to_string(TailMode m) {
  return m == TailMode::Zero ? "zero" : "constant";
}

inline TailMode tail_from_string(const std::string& s) {
  if (s == "zero") return TailMode::Zero;
  if (s == "constant") return TailMode::Constant;
  throw ParseError("tail mode must be \"zero\" or \"constant\", got \"" + s +
                   "\"");
}

}  // namespace detail

// Canonical text form: one compact JSON object with fields in a fixed
// order, trailing newline.  Serializing a parsed document reproduces it
// byte for byte.
inline std::string serialize_representation(const Representation& r) {
  nlohmann::ordered_json j;
  j["p"] = r.field.p();
  j["lo"] = r.quiver.lo;
  j["hi"] = r.quiver.hi;
  j["dims"] = r.dims;
  nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
  for (int pos = r.quiver.lo; pos < r.quiver.hi; ++pos) {
    nlohmann::ordered_json a;
    a["dir"] = r.quiver.dir(pos) == ArrowDir::R ? "R" : "L";
    a["matrix"] = detail::matrix_to_json(r.map_at(pos));
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  j["left_tail"] = detail::tail_to_string(r.quiver.left_tail);
  j["right_tail"] = detail::tail_to_string(r.quiver.right_tail);
  return j.dump() + "\n";
}

inline Representation parse_representation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("top level must be an object");
    for (const char* key :
         {"p", "lo", "hi", "dims", "arrows", "left_tail", "right_tail"})
      if (!j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    if (!j["p"].is_number_integer() || j["p"].get<i64>() < 2 ||
        j["p"].get<i64>() > 0xffffffffLL)
      throw ParseError("\"p\" must be an integer in [2, 2^32)");
    u32 p = j["p"].get<u32>();
    if (!is_prime(p))
      throw ParseError("\"p\" must be prime, got " + std::to_string(p));
    PrimeField field(p);
    if (!j["lo"].is_number_integer() || !j["hi"].is_number_integer())
      throw ParseError("\"lo\" and \"hi\" must be integers");
    QuiverSpec q;
    q.lo = j["lo"].get<int>();
    q.hi = j["hi"].get<int>();
    if (q.lo > q.hi) throw ParseError("\"lo\" must not exceed \"hi\"");
    q.left_tail = detail::tail_from_string(
        j["left_tail"].is_string() ? j["left_tail"].get<std::string>() : "");
    q.right_tail = detail::tail_from_string(
        j["right_tail"].is_string() ? j["right_tail"].get<std::string>() : "");
    if (!j["dims"].is_array() ||
        static_cast<int>(j["dims"].size()) != q.length())
      throw ParseError("\"dims\" must list one dimension per window vertex");
    std::vector<int> dims;
    for (const auto& d : j["dims"]) {
      if (!d.is_number_integer() || d.get<i64>() < 0)
        throw ParseError("dimensions must be non-negative integers");
      dims.push_back(d.get<int>());
    }
    if (!j["arrows"].is_array() ||
        static_cast<int>(j["arrows"].size()) != q.arrows())
      throw ParseError("\"arrows\" must list one entry per window arrow");
    std::vector<Matrix> maps;
    for (int i = 0; i < q.arrows(); ++i) {
      const auto& a = j["arrows"][i];
      std::string where = "arrow " + std::to_string(q.lo + i);
      if (!a.is_object() || !a.contains("dir") || !a.contains("matrix"))
        throw ParseError(where + ": expected {\"dir\", \"matrix\"}");
      if (!a["dir"].is_string())
        throw ParseError(where + ": \"dir\" must be \"R\" or \"L\"");
      std::string dir = a["dir"].get<std::string>();
      if (dir != "R" && dir != "L")
        throw ParseError(where + ": \"dir\" must be \"R\" or \"L\"");
      q.orientation.push_back(dir == "R" ? ArrowDir::R : ArrowDir::L);
      bool right = dir == "R";
      maps.push_back(detail::matrix_from_json(
          a["matrix"], field, dims[right ? i + 1 : i], dims[right ? i : i + 1],
          where));
    }
    Representation rep{std::move(q), field, std::move(dims), std::move(maps)};
    validate_representation(rep);
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

// Window [0, n] of the classical non-decomposable example: dimensions
// n + 1 - v, every arrow pointing left, each map the coordinate inclusion
// that prepends a zero.  Its barcode is one bar [0, k] for every k <= n.
inline Representation counterexample_truncation(int n, u32 p) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  PrimeField field(p);
  QuiverSpec q;
  q.lo = 0;
  q.hi = n;
  q.orientation.assign(n, ArrowDir::L);
  std::vector<int> dims;
  for (int v = 0; v <= n; ++v) dims.push_back(n + 1 - v);
  std::vector<Matrix> maps;
  for (int v = 0; v < n; ++v) {
    Matrix m(field, dims[v], dims[v + 1]);  // source x_{v+1}, target x_v
    for (int r = 0; r < dims[v + 1]; ++r) m.at(r + 1, r) = 1;
    maps.push_back(std::move(m));
  }
  Representation rep{q, field, std::move(dims), std::move(maps)};
  validate_representation(rep);
  return rep;
}

}  // namespace quiverdec
