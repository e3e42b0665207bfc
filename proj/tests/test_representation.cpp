#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "quiverdec/representation.hpp"

using namespace quiverdec;
using testutil::make_mat;
using testutil::make_span;
using testutil::make_vec;

namespace {

// Window [0,1], one arrow x_0 -> x_1 given by f.
Representation two_vertex(PrimeField field, int d0, int d1, const Matrix& f,
                          TailMode lt = TailMode::Zero,
                          TailMode rt = TailMode::Zero) {
  Representation r{{0, 1, {ArrowDir::R}, lt, rt}, field, {d0, d1}, {f}};
  validate_representation(r);
  return r;
}

}  // namespace

TEST_CASE("representation validation") {
  PrimeField f2(2);
  Representation bad{{0, 1, {ArrowDir::R}, TailMode::Zero, TailMode::Zero},
                     f2,
                     {2, 1},
                     {make_mat(f2, {{1, 0, 0}})}};
  CHECK_THROWS_AS(validate_representation(bad), std::invalid_argument);
  bad.maps = {make_mat(f2, {{1, 0}})};
  CHECK_NOTHROW(validate_representation(bad));
  bad.dims = {2};
  CHECK_THROWS_AS(validate_representation(bad), std::invalid_argument);
}

TEST_CASE("tail dimensions and maps") {
  PrimeField f3(3);
  Representation r = two_vertex(f3, 2, 1, make_mat(f3, {{1, 2}}),
                                TailMode::Zero, TailMode::Constant);
  CHECK(r.dim_ext(0) == 2);
  CHECK(r.dim_ext(1) == 1);
  CHECK(r.dim_ext(-1) == 0);
  CHECK(r.dim_ext(-10) == 0);
  CHECK(r.dim_ext(2) == 1);
  CHECK(r.dim_ext(37) == 1);
  // left tail arrow: zero map into the zero space
  Matrix lt = r.map_ext(-1);
  CHECK(lt.rows() == 0);
  CHECK(lt.cols() == 2);
  // right tail arrow: identity on the edge space
  CHECK(r.map_ext(1) == Matrix::identity(f3, 1));
  CHECK(r.map_ext(5) == Matrix::identity(f3, 1));
}

TEST_CASE("transport across one arrow") {
  PrimeField f2(2);
  Representation r = two_vertex(f2, 2, 1, make_mat(f2, {{1, 0}}));
  CHECK(transport(r, 0, 1, make_span(f2, 2, {{1, 0}})) ==
        Subspace::full(f2, 1));
  CHECK(transport(r, 0, 1, make_span(f2, 2, {{0, 1}})) ==
        Subspace::zero(f2, 1));
  // walking against the arrow takes preimages
  CHECK(transport(r, 1, 0, Subspace::zero(f2, 1)) ==
        make_span(f2, 2, {{0, 1}}));
  CHECK(transport(r, 1, 0, Subspace::full(f2, 1)) == Subspace::full(f2, 2));
  CHECK_THROWS_AS(transport(r, 0, 1, Subspace::zero(f2, 1)),
                  std::invalid_argument);
}

TEST_CASE("transport into a zero tail kills everything") {
  PrimeField f2(2);
  Representation r = two_vertex(f2, 1, 1, make_mat(f2, {{1}}));
  // left tail arrow points left; walking right from -1 to 0 opposes it,
  // so the zero space at -1 pulls back to the whole fibre at 0.
  Subspace zero_out = Subspace::zero(f2, 0);
  CHECK(transport(r, -1, 0, zero_out) == Subspace::full(f2, 1));
  // walking left from 0 lands in the zero space
  CHECK(transport(r, 0, -1, Subspace::full(f2, 1)) == zero_out);
}

TEST_CASE("subrep vectors") {
  PrimeField f2(2);
  Representation r = two_vertex(f2, 2, 1, make_mat(f2, {{1, 0}}));
  SubrepVector z = zero_subrep(r);
  SubrepVector f = full_subrep(r);
  CHECK(contains(f, z));
  CHECK_FALSE(contains(z, f));
  CHECK(intersect(r, f, z) == z);
  CHECK(sum(r, f, z) == f);
  CHECK(is_map_closed(r, z));
  CHECK(is_map_closed(r, f));
  SubrepVector bad = make_subrep(
      r, {make_span(f2, 2, {{1, 0}}), Subspace::zero(f2, 1)});
  CHECK_FALSE(is_map_closed(r, bad));  // f maps (1,0) to 1 != 0
  SubrepVector good = make_subrep(
      r, {make_span(f2, 2, {{0, 1}}), Subspace::zero(f2, 1)});
  CHECK(is_map_closed(r, good));
}

TEST_CASE("saturate transports both ways and is map closed") {
  PrimeField f2(2);
  QuiverSpec q{0, 2, {ArrowDir::R, ArrowDir::L}, TailMode::Zero,
               TailMode::Zero};
  Representation r{q,
                   f2,
                   {2, 1, 1},
                   {make_mat(f2, {{1, 0}}), make_mat(f2, {{1}})}};
  validate_representation(r);
  SubrepVector s = saturate(r, 0, make_span(f2, 2, {{1, 0}}));
  CHECK(s.values[0] == make_span(f2, 2, {{1, 0}}));
  CHECK(s.values[1] == Subspace::full(f2, 1));
  // arrow a_1 points left: value at 2 is the preimage of the value at 1
  CHECK(s.values[2] == Subspace::full(f2, 1));
  CHECK(is_map_closed(r, s));

  SubrepVector t = saturate(r, 1, Subspace::zero(f2, 1));
  CHECK(t.values[0] == make_span(f2, 2, {{0, 1}}));
  CHECK(t.values[1] == Subspace::zero(f2, 1));
  CHECK(t.values[2] == Subspace::zero(f2, 1));
  CHECK(is_map_closed(r, t));
}

TEST_CASE("serialization round trip is byte exact") {
  PrimeField f2(2);
  Representation r = two_vertex(f2, 1, 1, make_mat(f2, {{1}}));
  std::string text = serialize_representation(r);
  CHECK(text ==
        "{\"p\":2,\"lo\":0,\"hi\":1,\"dims\":[1,1],"
        "\"arrows\":[{\"dir\":\"R\",\"matrix\":[[1]]}],"
        "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}\n");
  Representation back = parse_representation(text);
  CHECK(back == r);
  CHECK(serialize_representation(back) == text);
}

TEST_CASE("round trip preserves a random instance") {
  Representation r = random_representation(5, 3, 32003, TailMode::Constant,
                                           TailMode::Zero, 12345);
  Representation back = parse_representation(serialize_representation(r));
  CHECK(back == r);
}

TEST_CASE("parser reduces entries into the field") {
  std::string text =
      "{\"p\":5,\"lo\":0,\"hi\":1,\"dims\":[1,1],"
      "\"arrows\":[{\"dir\":\"L\",\"matrix\":[[-1]]}],"
      "\"left_tail\":\"zero\",\"right_tail\":\"constant\"}";
  Representation r = parse_representation(text);
  CHECK(r.map_at(0).at(0, 0) == 4);
  CHECK(r.quiver.dir(0) == ArrowDir::L);
  CHECK(r.quiver.right_tail == TailMode::Constant);
}

TEST_CASE("parser rejects malformed input") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_representation(text), ParseError);
  };
  bad("not json");
  bad("[]");
  bad("{}");
  bad("{\"p\":4,\"lo\":0,\"hi\":0,\"dims\":[1],\"arrows\":[],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // non-prime
  bad("{\"p\":2,\"lo\":1,\"hi\":0,\"dims\":[],\"arrows\":[],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // empty window
  bad("{\"p\":2,\"lo\":0,\"hi\":0,\"dims\":[1,1],\"arrows\":[],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // dims length
  bad("{\"p\":2,\"lo\":0,\"hi\":0,\"dims\":[-1],\"arrows\":[],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // negative dim
  bad("{\"p\":2,\"lo\":0,\"hi\":0,\"dims\":[1],\"arrows\":[],"
      "\"left_tail\":\"diag\",\"right_tail\":\"zero\"}");  // bad tail
  bad("{\"p\":2,\"lo\":0,\"hi\":1,\"dims\":[1,1],"
      "\"arrows\":[{\"dir\":\"X\",\"matrix\":[[1]]}],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // bad dir
  bad("{\"p\":2,\"lo\":0,\"hi\":1,\"dims\":[1,1],"
      "\"arrows\":[{\"dir\":\"R\",\"matrix\":[[1,0]]}],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // bad shape
  bad("{\"p\":2,\"lo\":0,\"hi\":1,\"dims\":[1,1],"
      "\"arrows\":[{\"dir\":\"R\",\"matrix\":[[0.5]]}],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // non-integer
  bad("{\"p\":2,\"lo\":0,\"hi\":1,\"dims\":[1,1],\"arrows\":[],"
      "\"left_tail\":\"zero\",\"right_tail\":\"zero\"}");  // arrows length
}

TEST_CASE("seeded generator is reproducible") {
  Representation a = random_representation(4, 3, 5, TailMode::Zero,
                                           TailMode::Constant, 99);
  Representation b = random_representation(4, 3, 5, TailMode::Zero,
                                           TailMode::Constant, 99);
  CHECK(a == b);
  Representation c = random_representation(4, 3, 5, TailMode::Zero,
                                           TailMode::Constant, 100);
  CHECK_FALSE(a == c);
}

TEST_CASE("truncated chain example") {
  PrimeField f2(2);
  Representation r = counterexample_truncation(2, 2);
  CHECK(r.dims == std::vector<int>{3, 2, 1});
  REQUIRE(r.maps.size() == 2);
  CHECK(r.quiver.dir(0) == ArrowDir::L);
  CHECK(r.quiver.dir(1) == ArrowDir::L);
  CHECK(r.map_at(0) == make_mat(f2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(r.map_at(1) == make_mat(f2, {{0}, {1}}));
  CHECK(r.quiver.left_tail == TailMode::Zero);
  CHECK(r.quiver.right_tail == TailMode::Zero);
}
