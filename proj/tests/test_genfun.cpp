#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dessin/enumerate.hpp"
#include "dessin/errors.hpp"
#include "dessin/genfun.hpp"
#include "doctest.h"

using namespace dessin;

namespace {

Monomial mono(std::initializer_list<std::pair<VarId, int>> factors) {
  Monomial m;
  for (const auto& [v, e] : factors) m = m.times(Monomial::var(v, e));
  return m;
}

Passport pp(const std::string& text) { return Passport::parse(text); }

}  // namespace

TEST_CASE("passport parsing and printing") {
  Passport p = pp("a1^4 a2^2 b1 b7");
  CHECK(p.edges() == 8);
  CHECK(p.white_count() == 6);
  CHECK(p.black_count() == 2);
  CHECK(p.str() == "a1^4 a2^2 b1 b7");
  CHECK(pp("a2 a1 a1 b4").str() == "a1^2 a2 b4");

  CHECK_THROWS_AS(pp("a1 b2"), MalformedPassport);      // unbalanced
  CHECK_THROWS_AS(pp("a0 a2 b2"), MalformedPassport);   // zero degree
  CHECK_THROWS_AS(pp("c3 b3"), MalformedPassport);      // unknown family
  CHECK_THROWS_AS(pp(""), MalformedPassport);
  CHECK_THROWS_AS(pp("a1^0 a1 b1"), MalformedPassport);
}

TEST_CASE("one-colored vertex distribution series") {
  Series A = series_A(4);
  CHECK(A.coefficient(mono({{var_a(1), 1}, {var_t, 1}, {var_x, 1}})) == 1);
  CHECK(A.coefficient(mono({{var_a(1), 2}, {var_t, 2}, {var_x, 2}})) ==
        Rational(1, 2));
  CHECK(A.coefficient(mono({{var_a(1), 2},
                            {var_a(2), 1},
                            {var_t, 3},
                            {var_x, 4}})) == 1);
  // degree-0 vertices only enter at the tree level, not here
  CHECK(A.coefficient(mono({{var_a(0), 1}, {var_t, 1}})) == 0);

  Series B = series_B(3);
  CHECK(B.coefficient(mono({{var_b(1), 1}, {var_t, 1}, {var_y, 1}})) == 1);
  CHECK(B.coefficient(mono({{var_b(2), 1}, {var_t, 1}, {var_y, 2}})) == 1);
  CHECK(B.coefficient(mono({{var_b(1), 1},
                            {var_b(2), 1},
                            {var_t, 2},
                            {var_y, 3}})) == 1);
}

TEST_CASE("tree series counts plane trees weighted by automorphisms") {
  Series T = series_T(8);

  // two trees, automorphism orders 1 and 2 -> 1/1 + 1/2 = 3/2
  CHECK(T.coefficient(mono({{var_a(1), 2},
                            {var_a(4), 1},
                            {var_b(1), 2},
                            {var_b(2), 2},
                            {var_t, 7},
                            {var_x, 6}})) == Rational(3, 2));

  // unique 4-edge tree with these degrees, trivial automorphisms
  CHECK(T.coefficient(mono({{var_a(1), 2},
                            {var_a(2), 1},
                            {var_b(1), 1},
                            {var_b(3), 1},
                            {var_t, 5},
                            {var_x, 4}})) == 1);

  // two isolated "trees with 0 edges": bare a0 t and b0 t terms
  CHECK(T.coefficient(mono({{var_a(0), 1}, {var_t, 1}})) == 1);
  CHECK(T.coefficient(mono({{var_b(0), 1}, {var_t, 1}})) == 1);

  // the doubled-edge seed tree
  CHECK(T.coefficient(mono({{var_a(1), 2},
                            {var_b(2), 1},
                            {var_t, 3},
                            {var_x, 2}})) == Rational(1, 2));

  // every tree coefficient matches the closed-form count
  for (const auto& [m, coeff] : T.terms()) {
    if (m.family_degree(Family::A) == 0 || m.family_degree(Family::B) == 0)
      continue;  // the two isolated-vertex terms
    Passport p;
    for (const auto& [v, e] : m.factors()) {
      if (v.family == Family::A) p.white[v.index] = e;
      if (v.family == Family::B) p.black[v.index] = e;
    }
    INFO(m.str());
    CHECK(coeff == weighted_tree_count(p));
  }
}

TEST_CASE("doubling operators") {
  Series a0t = Series::term(1, mono({{var_a(0), 1}, {var_t, 1}}));
  CHECK(apply_Da(a0t).str() == "a2*t*x");

  Series a3t = Series::term(1, mono({{var_a(3), 1}, {var_t, 1}}));
  CHECK(apply_Da(a3t).str() == "3*a5*t*x");

  Series sq = Series::term(1, mono({{var_a(1), 2}, {var_t, 1}}));
  CHECK(apply_Da(sq).str() == "2*a1*a3*t*x");

  Series b1t = Series::term(1, mono({{var_b(1), 1}, {var_t, 1}}));
  CHECK(apply_Db(b1t).str() == "b3*t*x");
}

TEST_CASE("two-gon map series, five edges") {
  Series M = series_M(6);

  CHECK(M.coefficient(mono({{var_a(2), 1},
                            {var_b(2), 1},
                            {var_t, 2},
                            {var_x, 2}})) == 1);

  struct Expected {
    const char* passport;
    int count;
  };
  // complete passport census for five edges
  const Expected five_edges[] = {
      {"a5 b1^3 b2", 1},       {"a1^3 a2 b5", 1},      {"a1 a4 b1^2 b3", 1},
      {"a1^2 a3 b1 b4", 1},    {"a1 a4 b1 b2^2", 2},   {"a1 a2^2 b1 b4", 2},
      {"a2 a3 b1^2 b3", 2},    {"a1^2 a3 b2 b3", 2},   {"a2 a3 b1 b2^2", 1},
      {"a1 a2^2 b2 b3", 1},
  };
  Integer total = 0;
  auto counts = map_counts(5);
  CHECK(counts.size() == 10);
  for (const auto& e : five_edges) {
    INFO(e.passport);
    CHECK(counts.at(pp(e.passport)) == e.count);
    total += counts.at(pp(e.passport));
  }
  CHECK(total == 14);

  // sanity on the raw series slice: x-degree always equals t-degree,
  // white degree sum == black degree sum == edges, integer coefficients
  for (const auto& [m, coeff] : M.terms()) {
    CHECK(m.family_degree(Family::X) == m.family_degree(Family::T));
    CHECK(m.family_degree(Family::Y) == 0);
    int edges = m.family_degree(Family::T);
    int wsum = 0, bsum = 0;
    for (const auto& [v, e] : m.factors()) {
      if (v.family == Family::A) wsum += v.index * e;
      if (v.family == Family::B) bsum += v.index * e;
    }
    CHECK(wsum == edges);
    CHECK(bsum == edges);
    CHECK(denominator(coeff) == 1);
    CHECK(coeff > 0);
  }
}

TEST_CASE("passport counts used by the arithmetic examples") {
  CHECK(passport_count(pp("a2 b2")) == 1);
  CHECK(passport_count(pp("a1^4 a2^2 b1 b7")) == 5);
  CHECK(passport_count(pp("a1^3 a2 a3 b1^2 b6")) == 8);
  // two joining corners on the degree-2 white of each donor tree
  CHECK(passport_count(pp("a1^2 a4 b1 b2 b3")) == 4);
}
