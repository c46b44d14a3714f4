#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "floer/filtered.hpp"
#include "floer/knotio.hpp"
#include "floer/laurent.hpp"
#include "floer/module.hpp"

namespace floer {

// Reduced stable complex plus the arrows that drop the U-power, i.e. a model of CF-infinity:
// the differential of [y,i] is sum d(y,z)[z,i] + sum dv(y,z)[z,i-1].
struct KnotFloerInput {
  FilteredComplex cfr;
  std::map<std::pair<std::string, std::string>, Rational> dv;
  int s = 0;
  Laurent delta;

  int max_A() const;
  int min_A() const;
  nlohmann::json to_json() const;
  // "dv" may be omitted for perfect inputs; the thin model is then synthesized.
  static KnotFloerInput from_json(const nlohmann::json& j);
};

void validate(const KnotFloerInput& in);
bool is_perfect(const KnotFloerInput& in);

// Thin (staircase plus unit boxes) model with gr = A for a perfect knot with invariants (delta, s).
KnotFloerInput perfect_model(const Laurent& delta, int s, Field f = {Field::Q});
// Perfect input for an alternating diagram: s = signature/2, delta from Fox calculus.
KnotFloerInput alternating_input(const KnotDiagram& d, Field f = {Field::Q});

// Filtration level of the generator of H(cfr).
int s_invariant(const FilteredComplex& cfr);

FilteredComplex c_subcomplex(const KnotFloerInput& in, int k);
UComplex big_surgery_complex(const KnotFloerInput& in, int k);
HomologyDescription big_surgery_homology(const KnotFloerInput& in, int k);
int h_invariant(const KnotFloerInput& in, int k);

struct SurgeryAnswer {
  int m = 0;
  int k = 0;
  HomologyDescription description;  // tower bottom relative to d(L(m,1), s_k)
  int reduced_rank = 0;
  int d_shift = 0;
  int h = 0;
  nlohmann::json to_json() const;
};
// For m < 0, in is the mirror's input and d_shift = +2h (orientation reversal).
SurgeryAnswer integer_surgery(const KnotFloerInput& in, int m, int k);

struct ZeroSurgeryBetti {
  std::map<int, int> ranks;
  bool convention_dependent = false;  // k = 0: ranks of the twisted module
};
ZeroSurgeryBetti zero_surgery_betti(const KnotFloerInput& in, int k);

// Closed form for perfect knots; eps is the calibrated sign in the free-rank formula.
HomologyDescription perfect_closed_form(const Laurent& delta, int s, int k, int eps);
int calibrate_epsilon();
// Closed form checked against big_surgery_homology; throws ConsistencyError on disagreement.
HomologyDescription checked_closed_form(const KnotFloerInput& in, int k, int eps);

}  // namespace floer
