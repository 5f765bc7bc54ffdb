#pragma once

// Bipartite ribbon graphs ("modular graphs"): quotients of the Farey tree.
//
// Darts (half-edges) are 0..n-1.  sigma is the rotation: its cycles are the
// vertices, listed counterclockwise.  alpha pairs the two darts of each edge
// and always joins a circ-side dart to a bullet-side dart; alpha[d] == d
// marks d as a stub, a slot where an unexplored Farey branch attaches
// (infinite-index quotients are stored as finite cores with stubs).
//
// Conventions fixed here and used throughout:
//   * circ vertices have sigma-cycle length 1 or 2, bullet vertices 1 or 3;
//   * at a bullet vertex, one counterclockwise sigma step is the letter L
//     ("left turn"); two steps are LL;
//   * faces are the orbits of d -> sigma[alpha[d]]; a face's length is its
//     number of bullet visits.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "farey/integer.hpp"
#include "farey/word.hpp"

namespace farey {

enum class VertexType : std::uint8_t { Circ, Bullet };

struct RibbonGraph {
    std::vector<int> sigma;
    std::vector<int> alpha;
    std::vector<VertexType> vtype; // per dart: type of the vertex it sits on
    std::optional<int> base;       // base dart; its edge is the base edge

    int darts() const { return static_cast<int>(sigma.size()); }
    bool is_stub(int d) const { return alpha[d] == d; }
    bool has_stubs() const;
    int edge_count() const; // real (non-stub) edges
    std::vector<int> stubs() const;

    friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;
};

struct Passport {
    int edges = 0;
    int genus = 0;
    int punctures = 0;
    std::vector<int> circ_degrees;   // sorted ascending
    std::vector<int> bullet_degrees; // sorted ascending
    std::vector<int> face_degrees;   // sorted ascending
    Int monodromy_order;

    friend bool operator==(const Passport&, const Passport&) = default;
};

// Checks permutation validity, bipartite pairing, degree bounds and
// connectivity; throws InvalidGraph.
void validate(const RibbonGraph& g);

// Graph of the coset action given by sigma_s (order dividing 2) and sigma_l
// (order dividing 3) on edges {0..d-1}.  Throws NotAnAction, NotTransitive.
RibbonGraph from_permutation_pair(const std::vector<int>& sigma_s,
                                  const std::vector<int>& sigma_l);

// Inverse of from_permutation_pair on stub-free graphs: the edge
// permutations induced by sigma on the two sides.
struct PermPair {
    std::vector<int> sigma_s, sigma_l;
};
PermPair edge_permutations(const RibbonGraph& g);

// Orbits of sigma.alpha, each listed once.  Throws HasStubs.
std::vector<std::vector<int>> faces(const RibbonGraph& g);

// Throws HasStubs.
Passport passport(const RibbonGraph& g);

// Finite core of the subgroup generated by gens, by attaching each
// generator's loop path at a base edge and folding to a fixpoint.  Empty
// slots of the result are stubs; the empty list yields the single-edge core
// of the trivial subgroup with all three slots stubbed.
RibbonGraph fold_subgroup_graph(std::span<const Word> gens);

// Radius-r combinatorial ball of the Farey tree around a base edge: the
// branch grown bullet-first, alternating vertex types, with boundary slots
// stubbed.  Radii 0,1,2 have 1,3,5 edges.
RibbonGraph farey_ball(int radius);

// A walk is the sequence of darts at the vertices it crosses: standing on
// edge(walk[i]), the walk crosses vertex(walk[i]) and continues on the far
// side of the exit dart, which must carry walk[i+1].  Crossing a circ vertex
// emits S; at a bullet vertex the exit one sigma step from the entry emits L
// and two steps emits LL; a bounce at a degree-1 vertex emits S resp. L.
// The walk must start and end on the base edge.  Throws NotClosed,
// NotAdjacent.
Word loop_to_word(const RibbonGraph& g, std::span<const int> walk);

// True iff the normalized word, traced from the base edge, stays in the
// core and closes up: exact membership in the folded subgroup.
bool graph_traces(const RibbonGraph& g, const Word& w);

// Words of a generating set of the folded subgroup, read off a spanning
// tree: one loop per chord and per orbifold (degree-1) vertex.
std::vector<Word> extract_generators(const RibbonGraph& g);

// Label-independent certificate: minimal breadth-first relabeling over all
// choices of starting dart.  Equal certificates == isomorphic ribbon graphs
// (ignoring base).
std::vector<int> canonical_form(const RibbonGraph& g);

// Same relabeling started at the base dart only: equal results mean
// base-preserving isomorphism.
std::vector<int> based_form(const RibbonGraph& g);

// Deterministic emitters / parsers.
std::string to_dot(const RibbonGraph& g);
std::string to_json(const RibbonGraph& g);
RibbonGraph graph_from_json(const std::string& text); // throws InvalidGraph

} // namespace farey
