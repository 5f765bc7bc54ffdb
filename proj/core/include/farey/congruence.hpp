#pragma once

// Permutation actions of PSL(2,Z) on cosets of the congruence subgroups
// Gamma_0(N), Gamma_1(N) and Gamma(N), in O(d) memory coset models:
//   Gamma_0(N): points of P^1(Z/N);
//   Gamma_1(N): pairs +-(u,v) of exact additive order N;
//   Gamma(N):   elements of PSL(2, Z/N).

#include <cstdint>

#include "farey/ribbon_graph.hpp"

namespace farey {

enum class Family : std::uint8_t { Gamma0, Gamma1, GammaFull };

struct CongruenceSpec {
    Family family = Family::Gamma0;
    std::int64_t level = 1; // N >= 1
};

// Right multiplication by the images of S and L on the coset space.
PermPair coset_action(const CongruenceSpec& spec);

RibbonGraph congruence_graph(const CongruenceSpec& spec);

// Index of Gamma_0(N) in PSL(2,Z): N * prod_{p|N} (1 + 1/p), computed
// exactly from the factorization (independent of the enumeration).
std::int64_t gamma0_index(std::int64_t n);

} // namespace farey
