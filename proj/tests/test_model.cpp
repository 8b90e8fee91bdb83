#include "doctest.h"
#include "gkml/generators.hpp"
#include "gkml/model.hpp"

#include <cstdio>
#include <fstream>

using namespace gkml;

namespace {

const char* kSec6Json =
    R"({"worlds":["x","y"],"S":{"x,y":"1/2"},"e":{"x":{"p":"1"},"y":{"p":"1"}}})";

}  // namespace

TEST_CASE("loading the two-world example file") {
  GKModel m = model_from_json_text(kSec6Json);
  CHECK(m.worlds() == std::vector<std::string>{"x", "y"});
  CHECK(m.access("x", "y") == TruthValue::ratio(1, 2));
  CHECK(m.access("y", "x") == TruthValue::zero());  // defaulted
  CHECK(m.access("x", "x") == TruthValue::zero());
  CHECK(m.atom_value("x", "p") == TruthValue::one());
  CHECK(m.atom_value("x", "unmentioned") == TruthValue::zero());
  CHECK(m.atoms() == std::vector<std::string>{"p"});
}

TEST_CASE("malformed model files are rejected") {
  CHECK_THROWS_AS(model_from_json_text("not json"), Error);
  CHECK_THROWS_AS(model_from_json_text(R"({"worlds":[]})"), Error);
  CHECK_THROWS_AS(model_from_json_text(R"({"worlds":["x","x"]})"), Error);
  CHECK_THROWS_AS(model_from_json_text(R"({"worlds":["x"],"S":{"x,z":"1"}})"), Error);
  CHECK_THROWS_AS(model_from_json_text(R"({"worlds":["x"],"S":{"x,x":"3/2"}})"), Error);
  CHECK_THROWS_AS(model_from_json_text(R"({"worlds":["x"],"S":{"x":"1"}})"), Error);
  CHECK_THROWS_AS(model_from_json_text(R"({"worlds":["a,b"]})"), Error);
}

TEST_CASE("save and load round-trips bit-exactly") {
  std::mt19937_64 rng(42);
  ModelGenOptions opts;
  opts.max_worlds = 4;
  opts.atoms = {"p", "q"};
  for (int trial = 0; trial < 200; ++trial) {
    GKModel m = random_model(rng, opts);
    std::string text = model_to_json_text(m);
    GKModel back = model_from_json_text(text);
    CHECK(model_to_json_text(back) == text);
  }
  // with constants declared
  GKModel c = model_from_json_text(
      R"({"worlds":["x"],"e":{"x":{"p":"2/3"}},"constants":["1/4","3/4"]})");
  REQUIRE(c.constants().has_value());
  CHECK(c.constants()->count(TruthValue::zero()) == 1);  // 0 and 1 are implied
  CHECK(c.constants()->count(TruthValue::ratio(1, 4)) == 1);
  std::string text = model_to_json_text(c);
  CHECK(model_to_json_text(model_from_json_text(text)) == text);
}

TEST_CASE("frame properties with witnesses") {
  GKModel sec6 = builtin_model("sec6-crisp-fail");
  FrameReport r = frame_properties(sec6);
  CHECK(!r.crisp);
  CHECK(r.crisp_witness == "S(x,y) = 1/2");
  CHECK(!r.reflexive);
  CHECK(!r.symmetric);
  CHECK(r.transitive);  // only edge x->y at 1/2: no violating triple

  // S == 1 has all four properties, at every truncation size
  for (int n : {1, 2, 3, 7}) {
    FrameReport r2 = frame_properties(builtin_model("sec5-truncated", n));
    CHECK(r2.crisp);
    CHECK(r2.reflexive);
    CHECK(r2.transitive);
    CHECK(r2.symmetric);
  }

  // transitivity fails on a 1,1,1/2 chain
  GKModel chain = model_from_json_text(
      R"({"worlds":["x","y","z"],"S":{"x,y":"1","y,z":"1","x,z":"1/2"},"e":{}})");
  FrameReport r3 = frame_properties(chain);
  CHECK(!r3.transitive);
  CHECK(r3.transitive_witness == "S(x,y).S(y,z) = 1 > S(x,z) = 1/2");
}

TEST_CASE("builtin models carry the worked-example values") {
  GKModel sec5 = builtin_model("sec5-truncated", 3);
  CHECK(sec5.atom_value("2", "p") == TruthValue::ratio(1, 3));
  CHECK(sec5.access("0", "2") == TruthValue::one());

  GKModel sec6 = builtin_model("sec6-crisp-fail");
  CHECK(sec6.access("x", "y") == TruthValue::ratio(1, 2));
  CHECK(sec6.atom_value("y", "p") == TruthValue::one());

  GKModel sec3 = builtin_model("sec3-slice", 5);
  CHECK(sec3.atom_value("w", "p3") == TruthValue::ratio(3, 8));
  CHECK(sec3.atom_value("w", "q") == TruthValue::ratio(1, 2));
  CHECK(sec3.access("w", "w") == TruthValue::zero());

  CHECK_THROWS_AS(builtin_model("nonesuch"), Error);
  CHECK_THROWS_AS(builtin_model("sec5-truncated", 0), Error);
}

TEST_CASE("transform_model applies an order map pointwise") {
  GKModel sec6 = builtin_model("sec6-crisp-fail");
  OrderMap id = OrderMap::identity_on({TruthValue::ratio(1, 2)});
  GKModel same = transform_model(sec6, id);
  CHECK(model_to_json_text(same) == model_to_json_text(sec6));

  OrderMap up(std::vector<std::pair<TruthValue, TruthValue>>{
      {TruthValue::zero(), TruthValue::zero()},
      {TruthValue::ratio(1, 2), TruthValue::ratio(3, 4)},
      {TruthValue::one(), TruthValue::one()}});
  GKModel moved = transform_model(sec6, up);
  CHECK(moved.access("x", "y") == TruthValue::ratio(3, 4));
  CHECK(moved.atom_value("x", "p") == TruthValue::one());

  OrderMap tiny(std::vector<std::pair<TruthValue, TruthValue>>{
      {TruthValue::zero(), TruthValue::zero()}, {TruthValue::one(), TruthValue::one()}});
  CHECK_THROWS_WITH_AS(transform_model(sec6, tiny) /* misses 1/2 */,
                       "order map does not cover model value 1/2", Error);
}

TEST_CASE("endpoint-fixing transforms preserve the frame report") {
  std::mt19937_64 rng(11);
  ModelGenOptions opts;
  opts.max_worlds = 3;
  opts.atoms = {"p"};
  for (int trial = 0; trial < 100; ++trial) {
    GKModel m = random_model(rng, opts);
    std::vector<TruthValue> domain = m.all_values();
    OrderMap g = build_order_map(domain, TruthValue::ratio(1, 10), TruthValue::ratio(4, 5));
    GKModel t = transform_model(m, g);
    FrameReport a = frame_properties(m);
    FrameReport b = frame_properties(t);
    CHECK(a.crisp == b.crisp);
    CHECK(a.reflexive == b.reflexive);
    CHECK(a.transitive == b.transitive);
    CHECK(a.symmetric == b.symmetric);
  }
}
