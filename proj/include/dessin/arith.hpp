#pragma once

#include <optional>
#include <vector>

#include "dessin/passport.hpp"
#include "dessin/rational.hpp"

namespace dessin {

enum class Side { White, Black };

// gcd of { s_i*s_j : 2 <= i < j } and { s_i*(s_i - 1) : 2 <= i } over the
// multiplicities s_i of degree-i vertices on one side; nullopt when every
// generator vanishes (no divisibility constraint).
std::optional<long> s_invariant(const Passport& p, Side side);

// One admissible valuation pattern for the coordinates of a normalized
// model: the common valuation of the non-exceptional coordinates, plus the
// small exceptional valuation kappa in the third case.
struct ValuationCase {
  enum Kind { ExceptionalUnit = 1, Uniform = 2, SmallException = 3 };
  Kind kind;
  Rational value;  // e/(n-1), e/(n+1), or l = (e-2*kappa)/(n-1)
  long kappa = 0;  // SmallException only
};

// The three valuation patterns for given white count n+1 and ramification
// index e; SmallException is enumerated over all integers kappa with
// 1 <= kappa < l. Throws DegenerateN when n == 1.
std::vector<ValuationCase> valuation_cases(long n, long e);

struct AdmissibleEntry {
  long e_tau;
  bool via_n_minus_1 = false;  // s*e/(n-1) integral
  bool via_n_plus_1 = false;   // s*e/(n+1) integral
  bool via_small_exception = false;
  bool unconstrained = false;  // side had no s constraint at all
  std::vector<long> kappas;    // witnesses for the third bullet
  bool admissible() const {
    return unconstrained || via_n_minus_1 || via_n_plus_1 ||
           via_small_exception;
  }
};

struct RamificationReport {
  Side side;
  std::optional<long> s;  // nullopt: every e_tau unconstrained
  long n;                 // vertex count on the side, minus 1
  std::vector<AdmissibleEntry> entries;  // e_tau = 1..e_max in order
};

// Admissible ramification indices for a map whose edge count is p+1 with p
// prime; throws NotPrimePlusOne otherwise.
RamificationReport admissible_ramifications(const Passport& p, Side side,
                                            long e_max);

// d = e*n summed over distinct admissible e with positive inertia totals.
using InertiaSplit = std::vector<std::pair<long, long>>;  // (e, n) terms

struct OrbitDecomposition {
  std::vector<long> admissible;  // admissible e values used
  // partitions of the map count into parts that each admit a split,
  // each part annotated with all of its splits
  std::vector<std::vector<std::pair<long, std::vector<InertiaSplit>>>>
      partitions;
};

OrbitDecomposition orbit_decompositions(const Passport& p, Side side,
                                        long degree_total);

struct PolygonSegment {
  Rational slope;
  long length;  // horizontal extent
};

struct NewtonPolygon {
  std::vector<std::pair<long, long>> points;  // (exponent, valuation)
  std::vector<PolygonSegment> segments;       // left to right
};

// Lower convex hull of (i, v_prime(c_i)) over nonzero coefficients, given
// lowest-degree-first. Throws ZeroPolynomial on an all-zero input.
NewtonPolygon newton_polygon(const std::vector<Integer>& coeffs, long prime);

// Root valuations with multiplicity: a segment of slope -v and horizontal
// length L contributes L roots of valuation v.
std::vector<std::pair<Rational, long>> root_valuations(
    const std::vector<Integer>& coeffs, long prime);

bool is_prime(long n);

}  // namespace dessin
