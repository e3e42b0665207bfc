#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "quiverdec/oracle.hpp"

using namespace quiverdec;

namespace {

Representation rep_a2(u32 p = 2) {
  PrimeField f(p);
  QuiverSpec q{0, 1, {ArrowDir::R}, TailMode::Zero, TailMode::Zero};
  return Representation{q, f, {2, 1}, {testutil::make_mat(f, {{1, 0}})}};
}

// All matrices of the given shape over F_2, as row-major bit masks.
std::vector<Matrix> all_matrices(const PrimeField& f, int rows, int cols) {
  std::vector<Matrix> out;
  int cells = rows * cols;
  for (u64 mask = 0; mask < (u64{1} << cells); ++mask) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < cells; ++i)
      if (mask & (u64{1} << i)) m.at(i / cols, i % cols) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("half integers normalize and compare") {
  CHECK(HalfInteger::whole(3).twice() == 6);
  CHECK(HalfInteger::whole(3).numerator() == 3);
  CHECK(HalfInteger::whole(3).denominator() == 1);
  CHECK(HalfInteger::halves(5).numerator() == 5);
  CHECK(HalfInteger::halves(5).denominator() == 2);
  CHECK(HalfInteger::halves(-4) == HalfInteger::whole(-2));
  CHECK(HalfInteger::halves(1) + HalfInteger::halves(1) ==
        HalfInteger::whole(1));
  CHECK(HalfInteger::whole(2) - HalfInteger::halves(1) ==
        HalfInteger::halves(3));
  CHECK(HalfInteger::whole(0) < HalfInteger::halves(1));
  CHECK(HalfInteger::halves(-1) < HalfInteger::whole(0));
}

TEST_CASE("pairing values on small vectors") {
  DimVector e0{{0, 1}};
  DimVector e1{{1, 1}};
  DimVector seg{{0, 1}, {1, 1}, {2, 1}};
  CHECK(euler_form(e0, e0) == HalfInteger::whole(1));
  CHECK(euler_form(e0, e1) == HalfInteger::halves(-1));
  CHECK(euler_form(e1, e0) == HalfInteger::halves(-1));
  CHECK(euler_form(seg, seg) == HalfInteger::whole(1));
  DimVector lop{{0, 2}, {1, 1}};
  CHECK(euler_form(lop, lop) == HalfInteger::whole(3));
  DimVector far{{5, 1}};
  CHECK(euler_form(e0, far) == HalfInteger::whole(0));
}

TEST_CASE("self pairing equals half the sum of squared differences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    DimVector n;
    int len = static_cast<int>(rng() % 7) + 1;
    int base = static_cast<int>(rng() % 11) - 5;
    for (int i = 0; i < len; ++i) {
      long long v = static_cast<long long>(rng() % 9) - 4;
      if (v != 0) n[base + i] = v;
    }
    long long twice = 0;
    for (int i = base - 1; i <= base + len; ++i) {
      long long a = n.count(i) ? n[i] : 0;
      long long b = n.count(i + 1) ? n[i + 1] : 0;
      twice += (a - b) * (a - b);
    }
    CHECK(euler_form(n, n) == HalfInteger::halves(twice));
  }
}

TEST_CASE("pairing is symmetric and bilinear") {
  DimVector n{{0, 2}, {1, -1}, {3, 4}};
  DimVector m{{1, 3}, {2, 1}};
  DimVector k{{0, -2}, {2, 5}};
  CHECK(euler_form(n, m) == euler_form(m, n));
  DimVector mk = m;
  for (const auto& [v, x] : k) mk[v] += x;
  CHECK(euler_form(n, mk) == euler_form(n, m) + euler_form(n, k));
}

TEST_CASE("unit self pairing characterizes interval indicators") {
  // Nonnegative sweep: exactly the contiguous 0/1 vectors pair to one.
  int vals[6];
  for (int code = 0; code < 4096; ++code) {
    int c = code;
    DimVector n;
    for (int i = 0; i < 6; ++i) {
      vals[i] = c % 4;
      c /= 4;
      if (vals[i] != 0) n[i] = vals[i];
    }
    if (code >= 4096) break;
    bool unit = euler_form(n, n) == HalfInteger::whole(1);
    CHECK(unit == is_interval_indicator(n));
    if (code == 4095) break;
  }
}

TEST_CASE("self pairing is positive definite") {
  for (int code = 0; code < 15625; ++code) {
    int c = code;
    DimVector n;
    for (int i = 0; i < 6; ++i) {
      int v = c % 5 - 2;
      c /= 5;
      if (v != 0) n[i] = v;
    }
    if (n.empty()) {
      CHECK(euler_form(n, n) == HalfInteger::whole(0));
    } else {
      CHECK(HalfInteger::whole(0) < euler_form(n, n));
    }
  }
}

TEST_CASE("indicator recognizer rejects gaps and larger values") {
  CHECK(is_interval_indicator(DimVector{{2, 1}}));
  CHECK(is_interval_indicator(DimVector{{-1, 1}, {0, 1}}));
  CHECK_FALSE(is_interval_indicator(DimVector{}));
  CHECK_FALSE(is_interval_indicator(DimVector{{0, 1}, {2, 1}}));
  CHECK_FALSE(is_interval_indicator(DimVector{{0, 2}}));
  CHECK_FALSE(is_interval_indicator(DimVector{{0, 1}, {1, -1}}));
  CHECK(is_interval_indicator(DimVector{{0, 1}, {1, 0}, {2, 0}}));
}

TEST_CASE("dimension vector reads off window dimensions") {
  Representation r = rep_a2();
  CHECK(dimension_vector(r) == DimVector{{0, 2}, {1, 1}});
}

TEST_CASE("composite rank barcode on frozen examples") {
  Representation r = rep_a2(2);
  CHECK(rank_formula_barcode(r) == Barcode{{{0, 0}, 1}, {{0, 1}, 1}});

  PrimeField f2(2);
  QuiverSpec a2{1, 2, {ArrowDir::R}, TailMode::Zero, TailMode::Zero};
  Representation ident{a2, f2, {1, 1}, {testutil::make_mat(f2, {{1}})}};
  CHECK(rank_formula_barcode(ident) == Barcode{{{1, 2}, 1}});
  Representation zero{a2, f2, {1, 1}, {testutil::make_mat(f2, {{0}})}};
  CHECK(rank_formula_barcode(zero) == Barcode{{{1, 1}, 1}, {{2, 2}, 1}});

  PrimeField f(5);
  QuiverSpec q{0, 2, {ArrowDir::R, ArrowDir::R}, TailMode::Zero,
               TailMode::Zero};
  Representation s{q,
                   f,
                   {1, 2, 1},
                   {testutil::make_mat(f, {{1}, {0}}),
                    testutil::make_mat(f, {{0, 1}})}};
  Barcode expected{{{0, 1}, 1}, {{1, 2}, 1}};
  CHECK(rank_formula_barcode(s) == expected);
  CHECK(decompose(s).barcode == expected);
}

TEST_CASE("composite rank barcode rejects unsupported inputs") {
  PrimeField f(2);
  QuiverSpec left{0, 1, {ArrowDir::L}, TailMode::Zero, TailMode::Zero};
  Representation r{left, f, {1, 1}, {testutil::make_mat(f, {{1}})}};
  CHECK_THROWS_AS(rank_formula_barcode(r), PreconditionError);

  QuiverSpec ct{0, 1, {ArrowDir::R}, TailMode::Constant, TailMode::Zero};
  Representation s{ct, f, {1, 1}, {testutil::make_mat(f, {{1}})}};
  CHECK_THROWS_AS(rank_formula_barcode(s), PreconditionError);
}

TEST_CASE("composite rank barcode agrees with the decomposer") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    u32 p = trial % 2 == 0 ? 2 : 32003;
    PrimeField f(p);
    int len = static_cast<int>(rng() % 4) + 2;
    QuiverSpec q{0, len - 1,
                 std::vector<ArrowDir>(static_cast<size_t>(len - 1),
                                       ArrowDir::R),
                 TailMode::Zero, TailMode::Zero};
    std::vector<int> dims;
    for (int i = 0; i < len; ++i)
      dims.push_back(static_cast<int>(rng() % 4));
    std::vector<Matrix> maps;
    for (int i = 0; i + 1 < len; ++i) {
      Matrix m(f, dims[i + 1], dims[i]);
      for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b)
          m.at(a, b) = static_cast<u32>(rng() % p);
      maps.push_back(std::move(m));
    }
    Representation r{q, f, dims, maps};
    Barcode b = rank_formula_barcode(r);
    CHECK(b == decompose(r).barcode);
    for (int v = 0; v < len; ++v) {
      int covering = 0;
      for (const auto& [iv, mult] : b)
        if (iv.contains(v)) covering += mult;
      CHECK(covering == dims[static_cast<size_t>(v)]);
    }
  }
}

TEST_CASE("idempotent search on frozen examples") {
  CHECK(idempotent_bruteforce_barcode(rep_a2()) ==
        Barcode{{{0, 0}, 1}, {{0, 1}, 1}});

  PrimeField f(2);
  QuiverSpec zig{0, 2, {ArrowDir::R, ArrowDir::L}, TailMode::Zero,
                 TailMode::Zero};
  Representation z{zig,
                   f,
                   {1, 2, 1},
                   {testutil::make_mat(f, {{1}, {0}}),
                    testutil::make_mat(f, {{0}, {1}})}};
  CHECK(idempotent_bruteforce_barcode(z) ==
        Barcode{{{0, 1}, 1}, {{1, 2}, 1}});

  // Identity maps glue the whole zigzag into a single indecomposable.
  Representation glued{zig,
                       f,
                       {1, 1, 1},
                       {testutil::make_mat(f, {{1}}),
                        testutil::make_mat(f, {{1}})}};
  CHECK(idempotent_bruteforce_barcode(glued) == Barcode{{{0, 2}, 1}});

  QuiverSpec point{0, 0, {}, TailMode::Constant, TailMode::Constant};
  Representation c{point, f, {2}, {}};
  CHECK(idempotent_bruteforce_barcode(c) ==
        Barcode{{{Interval::neg_inf, Interval::pos_inf}, 2}});

  QuiverSpec half{0, 1, {ArrowDir::R}, TailMode::Constant, TailMode::Zero};
  Representation h{half, f, {1, 1}, {testutil::make_mat(f, {{1}})}};
  CHECK(idempotent_bruteforce_barcode(h) ==
        Barcode{{{Interval::neg_inf, 1}, 1}});
}

TEST_CASE("idempotent search rejects unsupported inputs") {
  CHECK_THROWS_AS(idempotent_bruteforce_barcode(rep_a2(3)), PreconditionError);

  PrimeField f(2);
  QuiverSpec q{0, 1, {ArrowDir::R}, TailMode::Zero, TailMode::Zero};
  Representation big{q, f, {3, 3}, {Matrix(f, 3, 3)}};
  CHECK_THROWS_AS(idempotent_bruteforce_barcode(big), PreconditionError);
}

TEST_CASE("idempotent search agrees with the decomposer exhaustively") {
  PrimeField f(2);
  TailMode modes[] = {TailMode::Zero, TailMode::Constant};
  for (TailMode lt : modes)
    for (TailMode rt : modes)
      for (ArrowDir dir : {ArrowDir::R, ArrowDir::L})
        for (int d0 = 0; d0 <= 2; ++d0)
          for (int d1 = 0; d1 <= 2; ++d1) {
            QuiverSpec q{0, 1, {dir}, lt, rt};
            int rows = dir == ArrowDir::R ? d1 : d0;
            int cols = dir == ArrowDir::R ? d0 : d1;
            for (const Matrix& m : all_matrices(f, rows, cols)) {
              Representation r{q, f, {d0, d1}, {m}};
              CHECK(idempotent_bruteforce_barcode(r) == decompose(r).barcode);
            }
          }
}

TEST_CASE("idempotent search agrees on three-vertex zigzags") {
  PrimeField f(2);
  TailMode modes[] = {TailMode::Zero, TailMode::Constant};
  for (TailMode lt : modes)
    for (TailMode rt : modes)
      for (ArrowDir d0 : {ArrowDir::R, ArrowDir::L})
        for (ArrowDir d1 : {ArrowDir::R, ArrowDir::L}) {
          QuiverSpec q{0, 2, {d0, d1}, lt, rt};
          int r0 = d0 == ArrowDir::R ? 2 : 1;
          int c0 = d0 == ArrowDir::R ? 1 : 2;
          int r1 = d1 == ArrowDir::R ? 1 : 2;
          int c1 = d1 == ArrowDir::R ? 2 : 1;
          for (const Matrix& m0 : all_matrices(f, r0, c0))
            for (const Matrix& m1 : all_matrices(f, r1, c1)) {
              Representation r{q, f, {1, 2, 1}, {m0, m1}};
              CHECK(idempotent_bruteforce_barcode(r) == decompose(r).barcode);
            }
        }
}

TEST_CASE("barcode formatting") {
  CHECK(format_barcode(Barcode{}) == "(empty)");
  Barcode b{{{0, 1}, 1}, {{Interval::neg_inf, 2}, 3}};
  CHECK(format_barcode(b) == "[-inf,2]x3 [0,1]x1");
}

TEST_CASE("truncation demo reports verified windows") {
  std::string report = counterexample_demo(3);
  CHECK(report.find("window [0,1]\n0 0 1\n0 1 1\ncertificate verified") !=
        std::string::npos);
  CHECK(report.find("window [0,3]\n0 0 1\n0 1 1\n0 2 1\n0 3 1\n"
                    "certificate verified") != std::string::npos);
  CHECK(report.find("FAILED") == std::string::npos);
  CHECK(report.find("direct product") != std::string::npos);
  CHECK_THROWS_AS(counterexample_demo(0), std::invalid_argument);
}
