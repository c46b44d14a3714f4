#include <fstream>
#include <random>

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "floer/error.hpp"
#include "floer/foxalex.hpp"
#include "floer/knotio.hpp"
#include "seifert.hpp"

using namespace floer;

namespace {

const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kLeftTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

nlohmann::json reference() {
  std::ifstream in(std::string(FLOER_TEST_DATA) + "/knotinfo_reference.json");
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("parse_pd accepts the grammar and rejects bad input") {
  auto d = parse_pd("# kink\nX(1,2,2,3)\n  X(3,4,4,1)  ");
  CHECK(d.size() == 2);
  CHECK(signature(d) == 0);

  auto t = parse_pd(kLeftTrefoil);
  CHECK(t.size() == 3);
  CHECK(is_alternating(t));

  CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), ValidationError);
  CHECK_THROWS_AS(parse_pd("X(1,2"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("Y(1,2,2,3)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(0,1,1,2) X(2,0,0,1)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd(""), ValidationError);
  // Two-component diagrams are rejected.
  CHECK_THROWS_AS(parse_pd("X(1,4,2,3) X(3,2,4,1)"), ValidationError);
}

TEST_CASE("PD round trip on the table") {
  for (auto& d : table_knots()) {
    auto back = parse_pd(to_pd(d));
    CHECK(back == d);
    CHECK(parse_pd(to_pd(mirror(d))) == mirror(d));
  }
}

TEST_CASE("crossing signs and writhe") {
  auto t = parse_pd(kTrefoil);
  CHECK(crossing_signs(t) == std::vector<int>{1, 1, 1});
  CHECK(writhe(t) == 3);
  CHECK(writhe(mirror(t)) == -3);
}

TEST_CASE("alternation") {
  CHECK(is_alternating(table_knot("3_1")));
  CHECK(is_alternating(table_knot("4_1")));
  CHECK_FALSE(is_alternating(table_knot("8_19")));
  // Switching one crossing of the trefoil gives two consecutive over-passes.
  auto t = parse_pd(kTrefoil);
  auto u = mirror(t);
  u.crossings[1] = t.crossings[1];
  CHECK_FALSE(is_alternating(u));
}

TEST_CASE("signature calibration") {
  CHECK(signature(table_knot("0_1")) == 0);
  CHECK(signature(parse_pd(kTrefoil)) == 2);
  CHECK(signature(parse_pd(kLeftTrefoil)) == -2);
  CHECK(signature(table_knot("4_1")) == 0);
  CHECK(signature(mirror(table_knot("4_1"))) == 0);
}

TEST_CASE("mirror is an involution that negates the signature") {
  for (auto& d : table_knots()) {
    CHECK(mirror(mirror(d)) == d);
    CHECK(signature(mirror(d)) == -signature(d));
    CHECK(alexander(mirror(d)) == alexander(d));
  }
}

TEST_CASE("signature agrees with the Seifert form of a different surface") {
  for (auto& d : table_knots()) {
    INFO(d.name);
    CHECK(signature(d) == -oracle::seifert_signature(d.crossings));
  }
}

TEST_CASE("table facts match the reference data") {
  auto ref = reference();
  for (auto& name : table_names()) {
    INFO(name);
    auto d = table_knot(name);
    REQUIRE(ref.contains(name));
    CHECK(signature(d) == ref[name]["signature"].get<int>());
    CHECK(is_alternating(d) == ref[name]["alternating"].get<bool>());
  }
}

TEST_CASE("connected sum") {
  auto t = table_knot("3_1"), f = table_knot("4_1"), u = table_knot("0_1");
  auto tt = connected_sum(t, t);
  CHECK(tt.size() == 6);
  CHECK(alexander(tt) == alexander(t) * alexander(t));
  CHECK(alexander(connected_sum(t, u)) == alexander(t));
  CHECK(signature(connected_sum(t, f)) == signature(t) + signature(f));

  std::mt19937 rng(7);
  auto names = table_names();
  std::uniform_int_distribution<size_t> pick(0, names.size() - 1);
  for (int i = 0; i < 25; ++i) {
    auto a = table_knot(names[pick(rng)]), b = table_knot(names[pick(rng)]);
    if (rng() % 2) b = mirror(b);
    auto s = connected_sum(a, b);
    INFO(a.name << " # " << b.name);
    validate(s);
    CHECK(s.size() == a.size() + b.size());
    CHECK(signature(s) == signature(a) + signature(b));
  }
}

TEST_CASE("table lookup errors") {
  CHECK_THROWS_AS(table_knot("11_1"), Error);
  CHECK(table_names().front() == "0_1");
}
