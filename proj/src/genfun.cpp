#include "dessin/genfun.hpp"

#include <mutex>
#include <stdexcept>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

Series one_color_series(Family family, VarId marker, int max_t) {
  if (max_t < 1) throw std::invalid_argument("max_t must be >= 1");
  // base = t * (marker * v_1 + marker^2 * v_2 + ...); degrees above max_t
  // cannot balance any surviving term.
  Series base(max_t);
  for (int i = 1; i <= max_t; ++i) {
    Monomial m = Monomial::var(var_t, 1)
                     .times(Monomial::var(marker, i))
                     .times(Monomial::var(VarId{family, (std::uint32_t)i}, 1));
    base.accumulate(m, 1);
  }
  Series sum = base;
  Series power = base;
  for (int n = 2; n <= max_t; ++n) {
    power = power * base;
    sum = sum + Rational(1, n) * power;
  }
  return sum;
}

}  // namespace

Series series_A(int max_t) { return one_color_series(Family::A, var_x, max_t); }
Series series_B(int max_t) { return one_color_series(Family::B, var_y, max_t); }

namespace {

// T and M are pure in max_t and expensive; remember them per process. The
// compute call runs unlocked since it may reenter for another cache.
Series memoized(int max_t, std::map<int, Series>& cache,
                Series (*compute)(int)) {
  static std::mutex lock;
  {
    std::scoped_lock guard(lock);
    auto it = cache.find(max_t);
    if (it != cache.end()) return it->second;
  }
  Series value = compute(max_t);
  std::scoped_lock guard(lock);
  return cache.emplace(max_t, std::move(value)).first->second;
}

Series compute_T(int max_t) {
  Series prod = series_A(max_t) * series_B(max_t);
  Series trees = prod.filter([](const Monomial& m) {
    int dx = m.family_degree(Family::X);
    return dx == m.family_degree(Family::Y) &&
           dx == m.family_degree(Family::T) - 1;
  });
  // y duplicates x after the filter; fold it away.
  Series out(max_t);
  for (const auto& [m, c] : trees.terms())
    out.accumulate(m.without_family(Family::Y), c);
  // Single-vertex trees: one white (a0) or one black (b0) vertex, no edges.
  out.accumulate(Monomial::var(var_a(0)).times(Monomial::var(var_t, 1)), 1);
  out.accumulate(Monomial::var(var_b(0)).times(Monomial::var(var_t, 1)), 1);
  return out;
}

}  // namespace

Series series_T(int max_t) {
  static std::map<int, Series> cache;
  return memoized(max_t, cache, compute_T);
}

namespace {

Series apply_doubling(const Series& s, Family family) {
  Series out(s.truncation());
  for (const auto& [m, c] : s.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (v.family != family) continue;
      int k = (int)v.index;
      Rational factor = Rational(e) * (k >= 2 ? k : 1);
      Monomial shifted = m.with_exponent(v, e - 1)
                             .times(Monomial::var(VarId{family, v.index + 2}))
                             .times(Monomial::var(var_x));
      out.accumulate(shifted, c * factor);
    }
  }
  return out;
}

}  // namespace

Series apply_Da(const Series& s) { return apply_doubling(s, Family::A); }
Series apply_Db(const Series& s) { return apply_doubling(s, Family::B); }

namespace {

Series compute_M(int max_t) {
  Series t = series_T(max_t);
  return apply_Da(t) * apply_Db(t);
}

}  // namespace

Series series_M(int max_t) {
  if (max_t < 2) throw std::invalid_argument("max_t must be >= 2");
  static std::map<int, Series> cache;
  return memoized(max_t, cache, compute_M);
}

Integer passport_count(const Passport& p) {
  p.validate();
  Rational c = series_M(p.edges()).coefficient(p.monomial());
  if (denominator(c) != 1)
    throw std::logic_error("map count came out non-integral");
  return numerator(c);
}

std::map<Passport, Integer> map_counts(int edges) {
  return map_counts(edges, series_M(edges));
}

std::map<Passport, Integer> map_counts(int edges, const Series& M) {
  std::map<Passport, Integer> out;
  for (const auto& [m, c] : M.terms()) {
    if (m.family_degree(Family::T) != edges) continue;
    Passport p;
    for (const auto& [v, e] : m.factors()) {
      if (v.family == Family::A) p.white[(int)v.index] = e;
      if (v.family == Family::B) p.black[(int)v.index] = e;
    }
    if (denominator(c) != 1)
      throw std::logic_error("map count came out non-integral");
    out[p] = numerator(c);
  }
  return out;
}

}  // namespace dessin
