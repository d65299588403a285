#pragma once

#include <map>
#include <string>
#include <vector>

#include "dessin/passport.hpp"

namespace dessin {

// A bipartite map on the oriented plane as a rotation system. Darts 2i and
// 2i+1 are the two ends of edge i (the involution alpha); each vertex owns
// one counterclockwise dart cycle.
struct PlaneMap {
  std::vector<std::vector<int>> cycles;  // vertex -> ccw dart cycle
  std::vector<int> color;                // vertex -> 0 white, 1 black

  static int alpha(int dart) { return dart ^ 1; }

  int dart_count() const;
  int vertex_count() const { return (int)cycles.size(); }
  int edge_count() const { return dart_count() / 2; }

  std::vector<int> sigma() const;        // dart -> next dart ccw at vertex
  std::vector<int> dart_vertex() const;  // dart -> owning vertex
  int face_count() const;

  // Checks the rotation-system invariants: alpha fixed-point-free (implicit
  // in the pairing), sigma a permutation, connectivity, bipartiteness, and
  // V - E + F = 2. Throws std::invalid_argument on violation.
  void validate() const;
};

// Traversal string identifying a map up to orientation- and color-preserving
// isomorphism together with a root dart choice.
using Code = std::vector<int>;

Code rooted_code(const PlaneMap& m, int root);
// Lexicographic minimum of rooted_code over all roots.
Code canonical_code(const PlaneMap& m);
// Rebuilds a map from any code produced above.
PlaneMap decode(const Code& code);
// Canonically relabeled copy (stable across isomorphic inputs).
PlaneMap canonical_form(const PlaneMap& m);

// Order of the color- and orientation-preserving automorphism group of a
// plane tree. Throws NotATree when the map has more than one face.
int aut_order(const PlaneMap& m);

Passport passport_of(const PlaneMap& m);
std::vector<int> face_degrees(const PlaneMap& m);  // ascending

// Text format: `darts <2E>` then one `w: d0 d1 ...` / `b: ...` line per
// vertex (ccw cycle); the edge involution pairs darts 2i and 2i+1.
std::string to_text(const PlaneMap& m);

}  // namespace dessin
