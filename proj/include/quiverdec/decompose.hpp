#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quiverdec/filtration.hpp"

namespace quiverdec {

// One isotypic layer of the decomposition: multiplicity many aligned basis
// vectors at every window vertex of the interval, empty lists elsewhere.
// Aligned means each arrow inside the interval carries the k-th vector at
// its source exactly onto the k-th vector at its target.
struct GradedPiece {
  Interval interval;
  int multiplicity = 0;
  std::vector<std::vector<Vec>> basis;  // per window vertex lo..hi
};

using Barcode = std::map<Interval, int>;

struct Decomposition {
  std::vector<GradedPiece> pieces;  // multiplicity > 0, sorted by interval
  Barcode barcode;
};

// Layer of alpha between the filtration values F (at alpha) and Fb (strictly
// below alpha).  The basis is chosen at the leftmost window vertex of alpha
// and pushed rightward: forward arrows apply the map, backward arrows lift
// through it inside F.  Everything here is forced by the filtration, so any
// failure is an internal error, not bad input.
inline GradedPiece graded_piece(const Representation& r, const Interval& a,
                                const SubrepVector& F, const SubrepVector& Fb) {
  const QuiverSpec& q = r.quiver;
  if (!contains(F, Fb))
    throw InvariantError("graded piece: filtration not nested");
  int v0 = std::max(a.left, q.lo);
  int v1 = std::min(a.right, q.hi);
  GradedPiece out{a, 0, std::vector<std::vector<Vec>>(q.length())};
  Subspace seed = complement(Fb.at(v0, q), F.at(v0, q));
  out.multiplicity = seed.dim();
  for (int v = v0; v <= v1; ++v)
    if (F.at(v, q).dim() != Fb.at(v, q).dim() + out.multiplicity)
      throw InvariantError("graded piece: dimension accounting failed");
  if (out.multiplicity == 0) return out;
  for (int t = 0; t < seed.dim(); ++t)
    out.basis[v0 - q.lo].push_back(seed.basis().row(t));
  for (int v = v0 + 1; v <= v1; ++v) {
    const Matrix& f = r.map_at(v - 1);
    const Subspace& target = F.at(v, q);
    bool forward = q.dir(v - 1) == ArrowDir::R;
    // backward arrow: solve f * x = b with x constrained into the target
    Matrix lift = forward ? Matrix(r.field, 0, 0)
                          : f.mul(target.basis().transpose());
    for (const Vec& b : out.basis[v - 1 - q.lo]) {
      Vec next;
      if (forward) {
        next = f.apply(b);
      } else {
        try {
          next = target.from_coordinates(solve_lift(lift, b));
        } catch (const NoSolutionError&) {
          throw InvariantError("graded piece: section does not lift");
        }
      }
      if (!target.contains(next))
        throw InvariantError("graded piece: section leaves the filtration");
      out.basis[v - q.lo].push_back(std::move(next));
    }
  }
  // the section must stay independent of the layer below at every vertex
  for (int v = v0; v <= v1; ++v) {
    Subspace low = Fb.at(v, q);
    Matrix gens(r.field, low.dim() + out.multiplicity, r.dim_at(v));
    for (int t = 0; t < low.dim(); ++t) gens.set_row(t, low.basis().row(t));
    for (int t = 0; t < out.multiplicity; ++t)
      gens.set_row(low.dim() + t, out.basis[v - q.lo][t]);
    if (rref(gens).rank != low.dim() + out.multiplicity)
      throw InvariantError("graded piece: section meets the layer below");
  }
  return out;
}

inline Decomposition decompose(const Representation& r) {
  validate_representation(r);
  FiltrationPair f = build_filtrations(r);
  Decomposition out;
  for (const Interval& a : enumerate_intervals(r.quiver)) {
    GradedPiece piece = graded_piece(r, a, f_alpha(r, f, a),
                                     f_strictly_below(r, f, a));
    if (piece.multiplicity == 0) continue;
    out.barcode[a] = piece.multiplicity;
    out.pieces.push_back(std::move(piece));
  }
  // all layers together must account for every fibre exactly
  for (int v = r.quiver.lo; v <= r.quiver.hi; ++v) {
    int count = 0;
    for (const GradedPiece& p : out.pieces)
      count += p.interval.contains(v) ? p.multiplicity : 0;
    if (count != r.dim_at(v))
      throw InvariantError("decompose: multiplicities do not fill the fibre");
    Matrix gens(r.field, count, r.dim_at(v));
    int row = 0;
    for (const GradedPiece& p : out.pieces)
      if (p.interval.contains(v))
        for (const Vec& b : p.basis[v - r.quiver.lo]) gens.set_row(row++, b);
    if (rref(gens).rank != r.dim_at(v))
      throw InvariantError("decompose: sections do not span the fibre");
  }
  return out;
}

// Self-contained witness of a decomposition; everything needed to check it
// against a representation without rerunning the decomposer.
struct CertificatePiece {
  Interval interval;
  int multiplicity = 0;
  std::vector<std::vector<Vec>> basis;
};

struct Certificate {
  u32 p = 2;
  int lo = 0;
  int hi = 0;
  std::vector<CertificatePiece> pieces;
};

inline Certificate make_certificate(const Representation& r,
                                    const Decomposition& d) {
  Certificate c{r.field.p(), r.quiver.lo, r.quiver.hi, {}};
  for (const GradedPiece& p : d.pieces)
    c.pieces.push_back({p.interval, p.multiplicity, p.basis});
  return c;
}

struct CheckResult {
  bool passed = true;
  std::string detail;
};

// Outcome of the five certificate checks plus the per-fibre dimension count.
struct CertificateReport {
  CheckResult structure;     // header matches, pieces sorted, intervals valid
  CheckResult membership;    // basis lists have the right shapes and entries
  CheckResult closure;       // sections aligned inside, zero when leaving
  CheckResult independence;  // all sections independent at every fibre
  CheckResult spanning;      // sections span every fibre
  CheckResult dimension;     // multiplicities add up to the fibre dimension

  bool all_passed() const {
    return structure.passed && membership.passed && closure.passed &&
           independence.passed && spanning.passed && dimension.passed;
  }
};

namespace detail {
inline bool fail(CheckResult& r, const std::string& why) {
  r.passed = false;
  r.detail = why;
  return false;
}

inline bool check_structure(const Representation& r, const Certificate& c,
                            CheckResult& out) {
  if (c.p != r.field.p()) return fail(out, "modulus mismatch");
  if (c.lo != r.quiver.lo || c.hi != r.quiver.hi)
    return fail(out, "window mismatch");
  for (size_t i = 0; i < c.pieces.size(); ++i) {
    const CertificatePiece& p = c.pieces[i];
    if (!is_effective_interval(r.quiver, p.interval))
      return fail(out, "interval not effective");
    if (p.multiplicity < 1) return fail(out, "multiplicity not positive");
    if (i > 0 && !(c.pieces[i - 1].interval < p.interval))
      return fail(out, "pieces not strictly sorted");
  }
  return true;
}

inline bool check_membership(const Representation& r, const Certificate& c,
                             CheckResult& out) {
  const QuiverSpec& q = r.quiver;
  for (const CertificatePiece& p : c.pieces) {
    if (static_cast<int>(p.basis.size()) != q.length())
      return fail(out, "basis list length mismatch");
    for (int v = q.lo; v <= q.hi; ++v) {
      const auto& vecs = p.basis[v - q.lo];
      if (!p.interval.contains(v)) {
        if (!vecs.empty())
          return fail(out, "vectors present outside the interval");
        continue;
      }
      if (static_cast<int>(vecs.size()) != p.multiplicity)
        return fail(out, "wrong number of vectors at a vertex");
      for (const Vec& b : vecs) {
        if (static_cast<int>(b.size()) != r.dim_at(v))
          return fail(out, "vector length mismatch");
        for (u32 x : b)
          if (x >= c.p) return fail(out, "entry not a residue");
      }
    }
  }
  return true;
}

inline bool check_closure(const Representation& r, const Certificate& c,
                          CheckResult& out) {
  const QuiverSpec& q = r.quiver;
  for (const CertificatePiece& p : c.pieces) {
    // window arrows plus the two adjacent tail arrows
    for (int pos = q.lo - 1; pos <= q.hi; ++pos) {
      bool right = q.dir(pos) == ArrowDir::R;
      int src = right ? pos : pos + 1;
      int tgt = right ? pos + 1 : pos;
      if (!p.interval.contains(src) || src < q.lo || src > q.hi) continue;
      const auto& sv = p.basis[src - q.lo];
      Matrix f = r.map_ext(pos);
      if (!p.interval.contains(tgt)) {
        // leaving the interval: the section must die here
        for (const Vec& b : sv)
          for (u32 x : f.apply(b))
            if (x != 0) return fail(out, "section survives leaving arrow");
        continue;
      }
      if (tgt < q.lo || tgt > q.hi) continue;  // constant tail: aligned by definition
      const auto& tv = p.basis[tgt - q.lo];
      for (int t = 0; t < p.multiplicity; ++t)
        if (f.apply(sv[t]) != tv[t])
          return fail(out, "section not aligned along an arrow");
    }
  }
  return true;
}

inline bool check_fibres(const Representation& r, const Certificate& c,
                         CheckResult& independence, CheckResult& spanning,
                         CheckResult& dimension) {
  const QuiverSpec& q = r.quiver;
  bool ok = true;
  for (int v = q.lo; v <= q.hi; ++v) {
    int count = 0;
    for (const CertificatePiece& p : c.pieces)
      if (p.interval.contains(v)) count += p.multiplicity;
    Matrix gens(r.field, count, r.dim_at(v));
    int row = 0;
    for (const CertificatePiece& p : c.pieces)
      if (p.interval.contains(v))
        for (const Vec& b : p.basis[v - q.lo]) gens.set_row(row++, b);
    int rank = rref(gens).rank;
    if (independence.passed && rank != count)
      ok = fail(independence, "sections dependent at a fibre");
    if (spanning.passed && rank != r.dim_at(v))
      ok = fail(spanning, "sections do not span a fibre");
    if (dimension.passed && count != r.dim_at(v))
      ok = fail(dimension, "multiplicities do not match a fibre dimension");
  }
  return ok;
}
}  // namespace detail

// Check a certificate against a representation from scratch; nothing here
// reuses the decomposer.
inline CertificateReport certify(const Representation& r,
                                 const Certificate& c) {
  CertificateReport rep;
  if (!detail::check_structure(r, c, rep.structure)) {
    const char* skip = "skipped: structure invalid";
    rep.membership = {false, skip};
    rep.closure = {false, skip};
    rep.independence = {false, skip};
    rep.spanning = {false, skip};
    rep.dimension = {false, skip};
    return rep;
  }
  if (!detail::check_membership(r, c, rep.membership)) {
    const char* skip = "skipped: membership invalid";
    rep.closure = {false, skip};
    rep.independence = {false, skip};
    rep.spanning = {false, skip};
    rep.dimension = {false, skip};
    return rep;
  }
  detail::check_closure(r, c, rep.closure);
  detail::check_fibres(r, c, rep.independence, rep.spanning, rep.dimension);
  return rep;
}

inline std::string serialize_certificate(const Certificate& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
  for (const CertificatePiece& p : c.pieces) {
    nlohmann::ordered_json e;
    if (p.interval.left == Interval::neg_inf)
      e["left"] = "-inf";
    else
      e["left"] = p.interval.left;
    if (p.interval.right == Interval::pos_inf)
      e["right"] = "+inf";
    else
      e["right"] = p.interval.right;
    e["multiplicity"] = p.multiplicity;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& vecs : p.basis) {
      nlohmann::ordered_json at_v = nlohmann::ordered_json::array();
      for (const Vec& b : vecs) at_v.push_back(b);
      basis.push_back(std::move(at_v));
    }
    e["basis"] = std::move(basis);
    pieces.push_back(std::move(e));
  }
  j["pieces"] = std::move(pieces);
  return j.dump() + "\n";
}

namespace detail {
inline int endpoint_from_json(const nlohmann::json& j, bool left) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (left && s == "-inf") return Interval::neg_inf;
    if (!left && s == "+inf") return Interval::pos_inf;
    throw ParseError("bad interval endpoint \"" + s + "\"");
  }
  if (!j.is_number_integer())
    throw ParseError("interval endpoint must be an integer or infinite");
  return j.get<int>();
}
}  // namespace detail

inline Certificate parse_certificate(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("top level must be an object");
    for (const char* key : {"p", "lo", "hi", "pieces"})
      if (!j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    if (!j["p"].is_number_integer() || j["p"].get<i64>() < 2 ||
        j["p"].get<i64>() > 0xffffffffLL)
      throw ParseError("\"p\" must be an integer in [2, 2^32)");
    Certificate c;
    c.p = j["p"].get<u32>();
    if (!is_prime(c.p))
      throw ParseError("\"p\" must be prime, got " + std::to_string(c.p));
    PrimeField field(c.p);
    if (!j["lo"].is_number_integer() || !j["hi"].is_number_integer())
      throw ParseError("\"lo\" and \"hi\" must be integers");
    c.lo = j["lo"].get<int>();
    c.hi = j["hi"].get<int>();
    if (c.lo > c.hi) throw ParseError("\"lo\" must not exceed \"hi\"");
    if (!j["pieces"].is_array()) throw ParseError("\"pieces\" must be a list");
    for (const auto& e : j["pieces"]) {
      if (!e.is_object()) throw ParseError("piece must be an object");
      for (const char* key : {"left", "right", "multiplicity", "basis"})
        if (!e.contains(key))
          throw ParseError(std::string("piece missing field \"") + key + "\"");
      CertificatePiece p;
      p.interval.left = detail::endpoint_from_json(e["left"], true);
      p.interval.right = detail::endpoint_from_json(e["right"], false);
      if (!e["multiplicity"].is_number_integer() ||
          e["multiplicity"].get<i64>() < 1)
        throw ParseError("\"multiplicity\" must be a positive integer");
      p.multiplicity = e["multiplicity"].get<int>();
      if (!e["basis"].is_array()) throw ParseError("\"basis\" must be a list");
      for (const auto& at_v : e["basis"]) {
        if (!at_v.is_array()) throw ParseError("basis entries must be lists");
        std::vector<Vec> vecs;
        for (const auto& b : at_v) {
          if (!b.is_array()) throw ParseError("basis vectors must be lists");
          Vec v;
          for (const auto& x : b) {
            if (!x.is_number_integer())
              throw ParseError("vector entries must be integers");
            v.push_back(field.reduce(x.get<i64>()));
          }
          vecs.push_back(std::move(v));
        }
        p.basis.push_back(std::move(vecs));
      }
      c.pieces.push_back(std::move(p));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace quiverdec
