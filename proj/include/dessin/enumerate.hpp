#pragma once

#include <vector>

#include "dessin/planemap.hpp"
#include "dessin/rational.hpp"

namespace dessin {

inline constexpr int kDefaultEdgeGuard = 10;

struct TreeClass {
  PlaneMap map;  // canonically labeled
  int aut;       // order of the plane automorphism group
};

// All bipartite plane trees with the given edge count, one representative
// per orientation-preserving isomorphism class, sorted by canonical code.
// edges = 0 yields the two single-vertex trees.
std::vector<TreeClass> enumerate_plane_trees(int edges,
                                             int guard = kDefaultEdgeGuard);

// All 2^1-maps with the given edge count, built by doubling an edge between
// a white corner of one tree and a black corner of another; each class is
// constructed exactly once (asserted) and results are sorted by canonical
// code.
std::vector<PlaneMap> enumerate_21maps(int edges, int guard = kDefaultEdgeGuard);

// Closed-form count of plane trees weighted by 1/|Aut|:
// (n-1)!(m-1)! divided by the factorials of the degree multiplicities.
Rational weighted_tree_count(const Passport& p);

}  // namespace dessin
