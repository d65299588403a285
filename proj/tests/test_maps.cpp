#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dessin/enumerate.hpp"
#include "dessin/errors.hpp"
#include "dessin/genfun.hpp"
#include "doctest.h"

using namespace dessin;

namespace {

Passport pp(const std::string& text) { return Passport::parse(text); }

PlaneMap double_edge_map() {
  PlaneMap m;
  m.cycles = {{0, 2}, {3, 1}};
  m.color = {0, 1};
  return m;
}

PlaneMap star4() {
  // white center of degree 4, four black leaves
  PlaneMap m;
  m.cycles = {{0, 2, 4, 6}, {1}, {3}, {5}, {7}};
  m.color = {0, 1, 1, 1, 1};
  return m;
}

}  // namespace

TEST_CASE("rotation system basics and validation") {
  PlaneMap m = double_edge_map();
  m.validate();
  CHECK(m.dart_count() == 4);
  CHECK(m.edge_count() == 2);
  CHECK(m.face_count() == 2);
  CHECK(face_degrees(m) == std::vector<int>{2, 2});
  CHECK(passport_of(m).str() == "a2 b2");

  PlaneMap s = star4();
  s.validate();
  CHECK(s.face_count() == 1);
  CHECK(face_degrees(s) == std::vector<int>{8});
  CHECK(passport_of(s).str() == "a4 b1^4");

  PlaneMap bad = double_edge_map();
  bad.color = {0, 0};  // not bipartite
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  PlaneMap disconnected;
  disconnected.cycles = {{0}, {1}, {2}, {3}};
  disconnected.color = {0, 1, 0, 1};
  CHECK_THROWS_AS(disconnected.validate(), std::invalid_argument);
}

TEST_CASE("canonical codes: round trip, isomorphism, automorphisms") {
  PlaneMap s = star4();
  Code code = canonical_code(s);
  PlaneMap rebuilt = decode(code);
  rebuilt.validate();
  CHECK(canonical_code(rebuilt) == code);
  CHECK(passport_of(rebuilt).str() == "a4 b1^4");
  CHECK(aut_order(s) == 4);

  // relabeled copy of the star is recognized as isomorphic
  PlaneMap relabeled;
  relabeled.cycles = {{1}, {6, 0, 2, 4}, {7}, {3}, {5}};
  relabeled.color = {1, 0, 1, 1, 1};
  CHECK(canonical_code(relabeled) == code);

  // the symmetric path w-b-w admits the half-turn
  PlaneMap path2;
  path2.cycles = {{0}, {1, 2}, {3}};
  path2.color = {0, 1, 0};
  CHECK(aut_order(path2) == 2);

  // a path with a white end and a black end is rigid
  PlaneMap path3;
  path3.cycles = {{0}, {1, 2}, {3, 4}, {5}};
  path3.color = {0, 1, 0, 1};
  CHECK(aut_order(path3) == 1);

  // single-vertex maps
  PlaneMap dot;
  dot.cycles = {{}};
  dot.color = {1};
  CHECK(canonical_code(dot) == Code{0, 1});
  CHECK(aut_order(dot) == 1);

  CHECK_THROWS_AS(aut_order(double_edge_map()), NotATree);
}

TEST_CASE("plane tree enumeration") {
  auto zero = enumerate_plane_trees(0);
  CHECK(zero.size() == 2);

  auto one = enumerate_plane_trees(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].aut == 1);

  auto two = enumerate_plane_trees(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].aut == 2);
  CHECK(two[1].aut == 2);

  // weighted counts match the closed form, grouped by passport, 1..6 edges
  for (int edges = 1; edges <= 6; ++edges) {
    std::map<Passport, Rational> weighted;
    for (const auto& cls : enumerate_plane_trees(edges)) {
      CHECK(cls.map.face_count() == 1);
      cls.map.validate();
      weighted[passport_of(cls.map)] += Rational(1, cls.aut);
    }
    for (const auto& [p, w] : weighted) {
      INFO(p.str());
      CHECK(w == weighted_tree_count(p));
    }
  }

  // canonical labels: enumerate returns each class once
  std::set<Code> codes;
  for (const auto& cls : enumerate_plane_trees(5))
    CHECK(codes.insert(canonical_code(cls.map)).second);

  // the two six-edge trees behind the 3/2 example
  std::vector<int> auts;
  for (const auto& cls : enumerate_plane_trees(6))
    if (passport_of(cls.map) == pp("a1^2 a4 b1^2 b2^2")) auts.push_back(cls.aut);
  std::sort(auts.begin(), auts.end());
  CHECK(auts == std::vector<int>{1, 2});

  CHECK_THROWS_AS(enumerate_plane_trees(11), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_plane_trees(5, 4), BudgetExceeded);
}

TEST_CASE("two-gon map enumeration") {
  auto maps2 = enumerate_21maps(2);
  REQUIRE(maps2.size() == 1);
  CHECK(passport_of(maps2[0]).str() == "a2 b2");
  CHECK(canonical_code(maps2[0]) == canonical_code(double_edge_map()));

  auto maps5 = enumerate_21maps(5);
  CHECK(maps5.size() == 14);
  std::map<Passport, int> census;
  std::set<Code> codes;
  for (const auto& m : maps5) {
    m.validate();
    CHECK(face_degrees(m) == std::vector<int>{2, 8});
    CHECK(m.vertex_count() == m.edge_count());
    census[passport_of(m)] += 1;
    CHECK(codes.insert(canonical_code(m)).second);
    // trivial automorphism group: all rooted codes distinct
    std::set<Code> rooted;
    for (int d = 0; d < m.dart_count(); ++d) rooted.insert(rooted_code(m, d));
    CHECK((int)rooted.size() == m.dart_count());
  }
  // independent cross-check against the generating function
  std::map<Passport, Integer> expected = map_counts(5);
  CHECK(census.size() == expected.size());
  for (const auto& [p, n] : census) {
    INFO(p.str());
    CHECK(expected.at(p) == n);
  }

  int hits = 0;
  for (const auto& m : enumerate_21maps(6))
    if (passport_of(m) == pp("a1^2 a4 b1 b2 b3")) ++hits;
  CHECK(hits == 4);
}

TEST_CASE("map text format matches the golden corpus") {
  std::ostringstream all;
  for (int edges = 2; edges <= 5; ++edges) {
    all << "edges " << edges << "\n";
    for (const auto& m : enumerate_21maps(edges)) all << to_text(m) << "\n";
  }
  std::ifstream golden(std::string(GOLDEN_DIR) + "/maps_upto5.txt",
                       std::ios::binary);
  REQUIRE(golden.good());
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(all.str() == want.str());
}
