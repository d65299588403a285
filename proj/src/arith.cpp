#include "dessin/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dessin/errors.hpp"

namespace dessin {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<long> s_invariant(const Passport& p, Side side) {
  p.validate();
  const auto& counts = side == Side::White ? p.white : p.black;
  std::vector<long> generators;
  for (auto i = counts.begin(); i != counts.end(); ++i) {
    if (i->first < 2) continue;
    generators.push_back((long)i->second * (i->second - 1));
    for (auto j = std::next(i); j != counts.end(); ++j)
      generators.push_back((long)i->second * j->second);
  }
  long g = 0;
  for (long v : generators) g = std::gcd(g, v);
  if (g == 0) return std::nullopt;
  return g;
}

std::vector<ValuationCase> valuation_cases(long n, long e) {
  if (n <= 1) throw DegenerateN("valuation cases need n >= 2");
  if (e < 1) throw std::invalid_argument("ramification index must be >= 1");
  std::vector<ValuationCase> out;
  out.push_back({ValuationCase::ExceptionalUnit, Rational(e, n - 1), 0});
  out.push_back({ValuationCase::Uniform, Rational(e, n + 1), 0});
  for (long kappa = 1; kappa * (n + 1) < e; ++kappa)
    out.push_back(
        {ValuationCase::SmallException, Rational(e - 2 * kappa, n - 1), kappa});
  return out;
}

RamificationReport admissible_ramifications(const Passport& p, Side side,
                                            long e_max) {
  p.validate();
  long prime = p.edges() - 1;
  if (!is_prime(prime))
    throw NotPrimePlusOne("edge count must be p+1 with p prime, got " +
                          std::to_string(prime + 1) + " edges");
  RamificationReport report;
  report.side = side;
  report.n =
      (side == Side::White ? p.white_count() : p.black_count()) - 1;
  report.s = s_invariant(p, side);
  for (long e = 1; e <= e_max; ++e) {
    AdmissibleEntry entry;
    entry.e_tau = e;
    if (!report.s) {
      entry.unconstrained = true;
    } else {
      long s = *report.s;
      long n = report.n;
      if (n >= 2 && (s * e) % (n - 1) == 0) entry.via_n_minus_1 = true;
      if ((s * e) % (n + 1) == 0) entry.via_n_plus_1 = true;
      if (n >= 2) {
        for (long kappa = 1; kappa * (n + 1) < e; ++kappa) {
          if ((s * (e - 2 * kappa)) % (n - 1) == 0) {
            entry.via_small_exception = true;
            entry.kappas.push_back(kappa);
          }
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

// all ways to write d as a sum of e*n over distinct admissible e
void splits_rec(const std::vector<long>& adm, std::size_t from, long remaining,
                InertiaSplit& acc, std::vector<InertiaSplit>& out) {
  if (remaining == 0) {
    if (!acc.empty()) out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < adm.size(); ++i) {
    long e = adm[i];
    for (long n = 1; e * n <= remaining; ++n) {
      acc.emplace_back(e, n);
      splits_rec(adm, i + 1, remaining - e * n, acc, out);
      acc.pop_back();
    }
  }
}

void partitions_rec(
    const std::vector<long>& parts, std::size_t from, long remaining,
    std::vector<long>& acc, std::vector<std::vector<long>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] > remaining) break;
    acc.push_back(parts[i]);
    partitions_rec(parts, i, remaining - parts[i], acc, out);
    acc.pop_back();
  }
}

}  // namespace

OrbitDecomposition orbit_decompositions(const Passport& p, Side side,
                                        long degree_total) {
  if (degree_total < 1)
    throw std::invalid_argument("degree total must be positive");
  auto report = admissible_ramifications(p, side, degree_total);
  OrbitDecomposition out;
  for (const auto& entry : report.entries)
    if (entry.admissible()) out.admissible.push_back(entry.e_tau);

  std::vector<long> decomposable;
  std::map<long, std::vector<InertiaSplit>> splits_of;
  for (long d = 1; d <= degree_total; ++d) {
    std::vector<InertiaSplit> splits;
    InertiaSplit acc;
    splits_rec(out.admissible, 0, d, acc, splits);
    if (!splits.empty()) {
      decomposable.push_back(d);
      splits_of.emplace(d, std::move(splits));
    }
  }

  std::vector<std::vector<long>> raw;
  std::vector<long> acc;
  partitions_rec(decomposable, 0, degree_total, acc, raw);
  for (const auto& partition : raw) {
    std::vector<std::pair<long, std::vector<InertiaSplit>>> annotated;
    for (long part : partition) annotated.emplace_back(part, splits_of[part]);
    out.partitions.push_back(std::move(annotated));
  }
  return out;
}

namespace {

long valuation(Integer c, long prime) {
  long v = 0;
  while (c % prime == 0) {
    c /= prime;
    ++v;
  }
  return v;
}

long cross(const std::pair<long, long>& o, const std::pair<long, long>& a,
           const std::pair<long, long>& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<Integer>& coeffs, long prime) {
  if (!is_prime(prime)) throw std::invalid_argument("modulus is not prime");
  NewtonPolygon poly;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      poly.points.emplace_back((long)i, valuation(coeffs[i], prime));
  if (poly.points.empty()) throw ZeroPolynomial("all coefficients are zero");

  // Andrew monotone chain, lower hull only; <= merges collinear points so
  // segment slopes come out strictly increasing.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : poly.points) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    long dx = hull[i + 1].first - hull[i].first;
    long dy = hull[i + 1].second - hull[i].second;
    poly.segments.push_back({Rational(dy, dx), dx});
  }
  return poly;
}

std::vector<std::pair<Rational, long>> root_valuations(
    const std::vector<Integer>& coeffs, long prime) {
  auto poly = newton_polygon(coeffs, prime);
  std::vector<std::pair<Rational, long>> out;
  for (const auto& seg : poly.segments)
    out.emplace_back(-seg.slope, seg.length);
  return out;
}

}  // namespace dessin
