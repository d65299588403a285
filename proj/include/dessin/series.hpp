#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dessin/rational.hpp"

namespace dessin {

// Variable families of the generating-function ring: a_i, b_j and the
// markers t (vertex/edge budget), x, y.
enum class Family : std::uint8_t { A = 0, B = 1, T = 2, X = 3, Y = 4 };

struct VarId {
  Family family = Family::T;
  std::uint32_t index = 0;  // meaningful for A and B only

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId var_a(std::uint32_t i) { return VarId{Family::A, i}; }
inline VarId var_b(std::uint32_t j) { return VarId{Family::B, j}; }
inline constexpr VarId var_t{Family::T, 0};
inline constexpr VarId var_x{Family::X, 0};
inline constexpr VarId var_y{Family::Y, 0};

// Sparse exponent vector. Stored exponents are strictly positive; factors
// are kept sorted by VarId so equality and ordering are structural.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarId v, int exponent = 1);

  int exponent(VarId v) const;
  // Total exponent of one family (the t-degree, x-degree, ... of a term).
  int family_degree(Family f) const;
  int total_degree() const;

  Monomial times(const Monomial& other) const;
  // Removes every factor of the given family.
  Monomial without_family(Family f) const;
  // Replaces the exponent of v (0 erases the factor).
  Monomial with_exponent(VarId v, int exponent) const;

  const std::vector<std::pair<VarId, int>>& factors() const { return exps_; }
  bool empty() const { return exps_.empty(); }

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lexicographic: total degree first, then the factor sequence.
  friend bool operator<(const Monomial& lhs, const Monomial& rhs);

 private:
  std::vector<std::pair<VarId, int>> exps_;
};

// Exact sparse series over Rational, optionally truncated in the t marker.
// Values are immutable from the caller's point of view; all operations
// return fresh series.
class Series {
 public:
  static constexpr int kUnbounded = -1;

  explicit Series(int truncation = kUnbounded) : truncation_(truncation) {}

  static Series constant(const Rational& c, int truncation = kUnbounded);
  static Series term(const Rational& c, const Monomial& m,
                     int truncation = kUnbounded);

  int truncation() const { return truncation_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  Series filter(const std::function<bool(const Monomial&)>& keep) const;

  std::string str() const;

  friend Series operator+(const Series& lhs, const Series& rhs);
  friend Series operator*(const Series& lhs, const Series& rhs);
  friend Series operator*(const Rational& c, const Series& s);

  // Adds c*m in place, dropping the term if the result is zero or the
  // monomial exceeds the truncation. Used by the builders in genfun.
  void accumulate(const Monomial& m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
  int truncation_;
};

}  // namespace dessin
