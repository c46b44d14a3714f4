#pragma once

#include <array>
#include <map>
#include <vector>

namespace oracle {

// Alexander polynomial from a Seifert matrix: Vogel moves make the Seifert circles
// a braid closure, Collins' construction gives V, then det(V - t V^T) normalized so
// that it is symmetric with value 1 at t = 1. Shares nothing with the Fox path.
std::map<int, long long> seifert_alexander(const std::vector<std::array<int, 4>>& pd);

// Signature of V + V^T for the same Seifert matrix, in the convention where the
// right-handed trefoil has signature -2.
int seifert_signature(const std::vector<std::array<int, 4>>& pd);

}  // namespace oracle
