#include <map>
#include <random>

#include <catch_amalgamated.hpp>

#include "complexes.hpp"
#include "floer/error.hpp"
#include "floer/foxalex.hpp"
#include "floer/knotio.hpp"
#include "floer/surgery.hpp"

using namespace floer;

namespace {

KnotFloerInput knot(const std::string& name) { return alternating_input(table_knot(name)); }

std::vector<KnotDiagram> perfect_knots() {
  std::vector<KnotDiagram> out;
  for (auto& d : table_knots())
    if (is_alternating(d)) out.push_back(d);
  return out;
}

// Independent oracles.
int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

int lens_h(const Laurent& delta, int k) {
  long long h = 0;
  for (auto [e, a] : delta.terms())
    if (e > k) h += (e - k) * a;
  return static_cast<int>(h);
}

int total_rank(const FilteredComplex& c) {
  int t = 0;
  for (auto [g, n] : oracle::gauss_homology(c)) t += n;
  return t;
}

}  // namespace

TEST_CASE("c_subcomplex examples") {
  for (int k = 0; k < 4; ++k) CHECK(c_subcomplex(knot("0_1"), k).gens.empty());
  auto t = c_subcomplex(knot("3_1"), 0);
  REQUIRE(t.gens.size() == 1);
  CHECK(t.gens[0].gr == -1);
  CHECK(c_subcomplex(knot("4_1"), 1).gens.empty());
  auto f = c_subcomplex(knot("4_1"), 0);
  REQUIRE(f.gens.size() == 1);
  CHECK(f.gens[0].A == -1);
  CHECK(f.gens[0].gr == -1);
}

TEST_CASE("c_subcomplex generator range") {
  for (auto& d : perfect_knots()) {
    auto in = alternating_input(d);
    for (int k = -3; k <= 3; ++k) {
      auto c = c_subcomplex(in, k);
      size_t want = 0;
      for (auto& g : in.cfr.gens) want += static_cast<size_t>(-std::min(k - g.A, 0));
      CHECK(c.gens.size() == want);
      REQUIRE_NOTHROW(validate(c));
    }
  }
}

TEST_CASE("big surgery examples") {
  auto u = big_surgery_homology(knot("0_1"), 0);
  CHECK(u.towers == std::vector<int>{0});
  CHECK(u.reduced_rank() == 0);
  auto t = knot("3_1");
  for (int k = 1; k < 4; ++k) CHECK(big_surgery_homology(t, k).towers == std::vector<int>{t.s});
  auto t0 = big_surgery_homology(t, 0);
  int n0 = std::max(ceil_half(t.s - 0), 0);
  CHECK(t0.towers == std::vector<int>{t.s - 2 * n0});
}

TEST_CASE("h invariant examples and the lens formula") {
  auto t = knot("3_1");
  CHECK(h_invariant(t, 0) == 1);
  CHECK(h_invariant(t, 1) == 0);
  for (int k = -3; k <= 3; ++k) {
    CHECK(h_invariant(knot("0_1"), k) == 0);
    CHECK(h_invariant(knot("4_1"), k) == 0);
  }
  // T(2, 2n+1) with s > 0: h_k is the lens-space sum over Delta.
  for (auto name : {"3_1", "5_1", "7_1", "9_1"}) {
    auto d = table_knot(name);
    auto in = alternating_input(d);
    if (in.s < 0) in = alternating_input(mirror(d));
    for (int k = 0; k <= 5; ++k) CHECK(h_invariant(in, k) == lens_h(in.delta, k));
  }
}

TEST_CASE("h laws across perfect knots") {
  for (auto& d : perfect_knots()) {
    INFO(d.name);
    auto in = alternating_input(d);
    int deg = in.delta.max_exp();
    std::map<int, int> h;
    for (int k = -11; k <= 11; ++k) h[k] = h_invariant(in, k);
    for (int k = 0; k <= 10; ++k) {
      CHECK(h[k] == h[-k]);
      CHECK(h[k] == std::max(ceil_half(in.s - k), 0));
      if (k >= 1) {
        CHECK(h[k] + 1 >= h[k - 1]);
        CHECK(h[k - 1] >= h[k]);
      }
      if (k >= deg) CHECK(h[k] == 0);
      if (k < in.s) CHECK(h[k] > 0);
    }
  }
}

TEST_CASE("integer surgery") {
  auto u = integer_surgery(knot("0_1"), 1, 0);
  CHECK(u.reduced_rank == 0);
  CHECK(u.d_shift == 0);

  auto t = knot("3_1");
  auto a = integer_surgery(t, 1, 0);
  CHECK(a.h == 1);
  CHECK(a.d_shift == -2);
  int sum = 0;
  for (int i = -6; i <= 6; ++i) sum += total_rank(c_subcomplex(t, std::abs(i)));
  CHECK(a.reduced_rank == sum - 1);

  for (int k = 0; k < 3; ++k)
    CHECK(integer_surgery(t, 41, k).reduced_rank == big_surgery_homology(t, k).reduced_rank());
  for (auto& d : perfect_knots()) {
    if (d.size() > 7) continue;
    auto in = alternating_input(d);
    for (int k = 0; k < 3; ++k) {
      INFO(d.name << " k=" << k);
      auto s = integer_surgery(in, 2 * in.delta.max_exp() + 3, k);
      CHECK(s.reduced_rank == big_surgery_homology(in, k).reduced_rank());
      CHECK(s.d_shift == -2 * s.h);
      CHECK(s.h == h_invariant(in, k));
    }
  }

  // -1 surgery on the right trefoil is computed from the left trefoil.
  auto neg = integer_surgery(alternating_input(mirror(table_knot("3_1"))), -1, 0);
  CHECK(neg.reduced_rank == 1);
  CHECK(neg.d_shift == 0);
  // +1 surgery on the figure-8.
  auto f = integer_surgery(knot("4_1"), 1, 0);
  CHECK(f.reduced_rank == 1);
  CHECK(f.d_shift == 0);

  CHECK_THROWS_AS(integer_surgery(t, 0, 0), DomainError);
  auto j = a.to_json();
  CHECK(j["d_shift"] == -2);
  CHECK(j["h"] == 1);
  CHECK(j["k"] == 0);
}

TEST_CASE("zero surgery Betti numbers") {
  CHECK(zero_surgery_betti(knot("0_1"), 1).ranks.empty());
  CHECK(oracle::nonzero(zero_surgery_betti(knot("3_1"), 1).ranks).empty());
  auto f = zero_surgery_betti(knot("4_1"), 0);
  CHECK(f.convention_dependent);
  CHECK(oracle::nonzero(f.ranks) == oracle::nonzero(oracle::gauss_homology(c_subcomplex(knot("4_1"), 0))));
  CHECK_FALSE(zero_surgery_betti(knot("4_1"), 1).convention_dependent);
}

TEST_CASE("closed form agrees with direct computation") {
  int eps = calibrate_epsilon();
  CHECK(std::abs(eps) == 1);
  CHECK(perfect_closed_form(Laurent::parse("-t^-1 + 3 - t"), 0, 3, eps) == big_surgery_homology(knot("4_1"), 3));
  auto flat = perfect_closed_form(Laurent::parse("-t^-1 + 3 - t"), 0, 1, eps);
  CHECK(flat.towers == std::vector<int>{0});
  CHECK(flat.reduced_rank() == 0);
  for (auto& d : perfect_knots()) {
    auto in = alternating_input(d);
    for (int k = 0; k <= 5; ++k) {
      INFO(d.name << " k=" << k);
      REQUIRE_NOTHROW(checked_closed_form(in, k, eps));
      auto cf = perfect_closed_form(in.delta, in.s, k, eps);
      if (k >= in.delta.max_exp() && k >= in.s) {
        CHECK(cf.towers == std::vector<int>{in.s});
        CHECK(cf.reduced_rank() == 0);
      }
    }
  }
  CHECK_THROWS_AS(perfect_closed_form(Laurent::constant(1), 0, -1, eps), DomainError);
  CHECK_THROWS_AS(checked_closed_form(knot("3_1"), 0, -eps), ConsistencyError);
}

TEST_CASE("Euler characteristic bookkeeping") {
  // chi(C_{s_k}) = (-1)^s * sum_{i>k} (i-k) a_i on perfect inputs.
  for (auto& d : perfect_knots()) {
    auto in = alternating_input(d);
    for (int k = 0; k <= 4; ++k) {
      long long chi = 0;
      for (auto& g : c_subcomplex(in, k).gens) chi += (g.gr % 2 == 0) ? 1 : -1;
      INFO(d.name << " k=" << k);
      CHECK(chi == (in.s % 2 ? -1 : 1) * lens_h(in.delta, k));
    }
  }
}

TEST_CASE("s invariant") {
  for (auto& d : perfect_knots()) {
    if (d.size() > 9) continue;
    auto in = alternating_input(d);
    CHECK(in.s * 2 == signature(d));
    CHECK(s_invariant(in.cfr) == in.s);
  }
  std::mt19937 rng(21);
  auto ks = perfect_knots();
  std::uniform_int_distribution<size_t> pick(0, ks.size() - 1);
  for (int i = 0; i < 20; ++i) {
    auto a = alternating_input(ks[pick(rng)]), b = alternating_input(ks[pick(rng)]);
    CHECK(s_invariant(tensor(a.cfr, b.cfr)) == a.s + b.s);
  }
}

TEST_CASE("input validation and JSON") {
  for (auto name : {"3_1", "4_1", "6_2"}) {
    auto in = knot(name);
    REQUIRE_NOTHROW(validate(in));
    CHECK(is_perfect(in));
    auto back = KnotFloerInput::from_json(in.to_json());
    CHECK(back.cfr.gens == in.cfr.gens);
    CHECK(back.cfr.d == in.cfr.d);
    CHECK(back.dv == in.dv);
    CHECK(back.s == in.s);
    CHECK(back.delta == in.delta);
  }
  auto bad = knot("3_1");
  bad.s = 2;
  CHECK_THROWS_AS(validate(bad), Error);
  auto wrong = knot("3_1");
  wrong.delta = Laurent::parse("-t^-1 + 3 - t");
  CHECK_THROWS_AS(validate(wrong), Error);
  auto j = knot("4_1").to_json();
  j.erase("dv");
  auto synth = KnotFloerInput::from_json(j);
  CHECK(big_surgery_homology(synth, 0) == big_surgery_homology(knot("4_1"), 0));
}
