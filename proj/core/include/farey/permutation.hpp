#pragma once

#include <vector>

#include "farey/integer.hpp"

namespace farey {

// Permutations are vectors p with p[i] = image of i, over {0..n-1}.

bool is_permutation(const std::vector<int>& p);
std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b); // (a*b)(i) = a[b[i]]
std::vector<int> perm_inverse(const std::vector<int>& p);
int perm_order_divides(const std::vector<int>& p, int k); // p^k == id
bool acts_transitively(const std::vector<int>& a, const std::vector<int>& b);

// Order of the group generated by gens, by a deterministic Schreier-Sims
// stabilizer chain; exact for any size via big integers.
Int group_order(const std::vector<std::vector<int>>& gens);

} // namespace farey
