#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dessin/series.hpp"

namespace dessin {

// Vertex-degree multisets of a bipartite map, split by color.
// Text grammar: whitespace-separated tokens `a<d>` / `a<d>^<m>` and
// `b<d>` / `b<d>^<m>`; order-insensitive; duplicate degrees are summed.
struct Passport {
  std::map<int, int> white;  // degree -> multiplicity, degrees >= 1
  std::map<int, int> black;

  // Throws MalformedPassport unless the white and black degree sums agree
  // and all entries are positive.
  void validate() const;

  int edges() const;        // the common degree sum E
  int white_count() const;  // number of white vertices
  int black_count() const;

  // Degrees with multiplicity, ascending; e.g. a1^2 a4 -> {1, 1, 4}.
  std::vector<int> white_degrees() const;
  std::vector<int> black_degrees() const;

  // The monomial a^white * b^black * t^E * x^E of the map series.
  Monomial monomial() const;

  static Passport parse(const std::string& text);
  std::string str() const;

  friend auto operator<=>(const Passport&, const Passport&) = default;
};

}  // namespace dessin
