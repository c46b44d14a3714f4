#include <map>
#include <set>

#include <catch_amalgamated.hpp>

#include "floer/altgen.hpp"
#include "floer/error.hpp"
#include "floer/foxalex.hpp"
#include "floer/knotio.hpp"

using namespace floer;

namespace {

std::vector<KnotDiagram> alternating_knots() {
  std::vector<KnotDiagram> out;
  for (auto& d : table_knots())
    if (is_alternating(d)) out.push_back(d);
  return out;
}

Laurent signed_sum(const AltDiagram& ad) {
  Laurent s;
  for (auto& m : ad.mprs()) {
    auto [a, sg] = ad.alexander(m);
    s.add(a, sg);
  }
  return s;
}

}  // namespace

TEST_CASE("trefoil and figure-8 MPRs") {
  auto t = table_knot("3_1");
  for (int c1 = 0; c1 < 3; ++c1) {
    AltDiagram ad(t, c1);
    CHECK(signed_sum(ad).str() == "t^-1 - 1 + t");
    std::set<int> exps;
    for (auto& m : ad.mprs()) exps.insert(ad.alexander(m).first);
    CHECK(exps == std::set<int>{-1, 0, 1});
    size_t total = 0;
    for (auto& y : ad.base_generators()) total += size_t(1) << ad.pool(y).size();
    CHECK(total == ad.mprs().size());
  }
  auto f = table_knot("4_1");
  AltDiagram af(f, 0);
  CHECK(af.base_generators().size() == 8);
  CHECK(signed_sum(af).str() == "-t^-1 + 3 - t");
}

TEST_CASE("kinked unknot") {
  auto u = table_knot("0_1");
  for (int c1 = 0; c1 < 2; ++c1) {
    AltDiagram ad(u, c1);
    CHECK(signed_sum(ad) == Laurent::constant(1));
    CHECK(signed_sum(ad) == generator_spectrum(wirtinger(u)).signed_sum());
  }
  CHECK(reduced_ranks(u).ranks == std::map<int, int>{{0, 1}});
}

TEST_CASE("a base generator compared with itself has grading difference 0") {
  AltDiagram ad(table_knot("5_2"), 0);
  for (auto& m : ad.mprs()) CHECK(ad.alexander(m).first - ad.alexander(m).first == 0);
}

TEST_CASE("non-alternating input is refused") {
  CHECK_THROWS_AS(enumerate_mprs(table_knot("8_19"), 0), DomainError);
  CHECK_THROWS_AS(certify_small(table_knot("8_20")), DomainError);
}

TEST_CASE("MPR structure across the alternating table") {
  for (auto& d : alternating_knots()) {
    if (d.size() > 9) continue;
    INFO(d.name);
    auto cert = certify_small(d);
    AltDiagram ad(d, cert.c1);
    CHECK(signed_sum(ad) == alexander(d));

    auto bases = ad.base_generators();
    CHECK(bases.size() == size_t(1) << (d.size() - 1));
    std::map<BaseGenerator, size_t> over;
    std::set<MPR, bool (*)(const MPR&, const MPR&)> seen(+[](const MPR& a, const MPR& b) {
      return std::tie(a.choice, a.target) < std::tie(b.choice, b.target);
    });
    for (auto& m : ad.mprs()) {
      ++over[ad.base(m)];
      CHECK(seen.insert(m).second);
      ad.check(m);
    }
    for (auto& y : bases) {
      auto pool = ad.pool(y);
      std::set<int> used;
      for (auto& comp : pool)
        for (int c : comp) CHECK(used.insert(c).second);
      CHECK(over[y] == size_t(1) << pool.size());
    }
    CHECK(over.size() == bases.size());
  }
}

TEST_CASE("free-function wrappers agree with AltDiagram") {
  auto d = table_knot("6_1");
  AltDiagram ad(d, 1);
  auto ms = enumerate_mprs(d, 1);
  CHECK(ms == ad.mprs());
  for (auto& m : ms) CHECK(mpr_alexander(m, d, 1) == ad.alexander(m));
  auto y = ad.base_generators().front();
  CHECK(marked_component_pool(y, d, 1) == ad.pool(y));
}

TEST_CASE("smallness census") {
  for (auto& d : alternating_knots()) {
    INFO(d.name);
    auto cert = certify_small(d);
    if (d.name == "10_123") {
      CHECK_FALSE(cert.verdict);
      REQUIRE(cert.witness.has_value());
      CHECK_FALSE(cert.witness_component.empty());
      AltDiagram ad(d, cert.c1);
      auto comps = ad.marked_components(*cert.witness);
      CHECK(std::find(comps.begin(), comps.end(), cert.witness_component) != comps.end());
    } else {
      CHECK(cert.verdict);
    }
  }
  CHECK(certify_small(table_knot("3_1")).verdict);
  CHECK(certify_small(table_knot("5_2")).verdict);
  // 8_5 is the pretzel P(3,3,2).
  CHECK(certify_small(table_knot("8_5")).verdict);
}

TEST_CASE("reduced ranks") {
  CHECK(reduced_ranks(table_knot("3_1")).ranks == std::map<int, int>{{-1, 1}, {0, 1}, {1, 1}});
  CHECK(reduced_ranks(table_knot("4_1")).ranks == std::map<int, int>{{-1, 1}, {0, 3}, {1, 1}});
  CHECK_THROWS_AS(reduced_ranks(table_knot("10_123")), DomainError);
  for (auto& d : alternating_knots()) {
    if (d.name == "10_123") continue;
    INFO(d.name);
    auto rr = reduced_ranks(d);
    auto delta = alexander(d);
    Laurent back;
    int total = 0;
    for (auto [j, r] : rr.ranks) {
      CHECK(r == std::llabs(delta.coef(j)));
      CHECK(rr.ranks.count(-j));
      if (rr.ranks.count(-j)) CHECK(rr.ranks.at(-j) == r);
      back.add(j, rr.signs.at(j) * r);
      total += r;
    }
    CHECK(back == delta);
    CHECK(total % 2 == 1);
  }
}

TEST_CASE("JSON emission") {
  auto j = reduced_ranks(table_knot("4_1")).to_json();
  CHECK(j["ranks"] == nlohmann::json{{"-1", 1}, {"0", 3}, {"1", 1}});
  CHECK(j.contains("c1"));
}
