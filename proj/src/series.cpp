#include "dessin/series.hpp"

#include <algorithm>
#include <sstream>

namespace dessin {

Monomial Monomial::var(VarId v, int exponent) {
  Monomial m;
  if (exponent != 0) m.exps_.emplace_back(v, exponent);
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(
      exps_.begin(), exps_.end(), v,
      [](const std::pair<VarId, int>& p, VarId q) { return p.first < q; });
  return (it != exps_.end() && it->first == v) ? it->second : 0;
}

int Monomial::family_degree(Family f) const {
  int d = 0;
  for (const auto& [v, e] : exps_)
    if (v.family == f) d += e;
  return d;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.exps_.reserve(exps_.size() + other.exps_.size());
  auto a = exps_.begin(), b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.exps_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without_family(Family f) const {
  Monomial out;
  for (const auto& p : exps_)
    if (p.first.family != f) out.exps_.push_back(p);
  return out;
}

Monomial Monomial::with_exponent(VarId v, int exponent) const {
  Monomial out;
  bool placed = false;
  for (const auto& p : exps_) {
    if (p.first == v) {
      if (exponent != 0) out.exps_.emplace_back(v, exponent);
      placed = true;
    } else {
      if (!placed && v < p.first) {
        if (exponent != 0) out.exps_.emplace_back(v, exponent);
        placed = true;
      }
      out.exps_.push_back(p);
    }
  }
  if (!placed && exponent != 0) out.exps_.emplace_back(v, exponent);
  return out;
}

bool operator<(const Monomial& lhs, const Monomial& rhs) {
  int dl = lhs.total_degree(), dr = rhs.total_degree();
  if (dl != dr) return dl < dr;
  return lhs.exps_ < rhs.exps_;
}

namespace {

std::string var_name(VarId v) {
  switch (v.family) {
    case Family::A:
      return "a" + std::to_string(v.index);
    case Family::B:
      return "b" + std::to_string(v.index);
    case Family::T:
      return "t";
    case Family::X:
      return "x";
    case Family::Y:
      return "y";
  }
  return "?";
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : exps_) {
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Series Series::constant(const Rational& c, int truncation) {
  return term(c, Monomial{}, truncation);
}

Series Series::term(const Rational& c, const Monomial& m, int truncation) {
  Series s(truncation);
  s.accumulate(m, c);
  return s;
}

void Series::accumulate(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (truncation_ != kUnbounded && m.family_degree(Family::T) > truncation_)
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Series::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Series Series::filter(const std::function<bool(const Monomial&)>& keep) const {
  Series out(truncation_);
  for (const auto& [m, c] : terms_)
    if (keep(m)) out.terms_.emplace(m, c);
  return out;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.empty()) {
      out += rational_str(c);
    } else if (c == 1) {
      out += m.str();
    } else {
      out += rational_str(c) + "*" + m.str();
    }
  }
  return out;
}

namespace {

int merged_truncation(int a, int b) {
  if (a == Series::kUnbounded) return b;
  if (b == Series::kUnbounded) return a;
  return std::min(a, b);
}

}  // namespace

Series operator+(const Series& lhs, const Series& rhs) {
  Series out(merged_truncation(lhs.truncation_, rhs.truncation_));
  for (const auto& [m, c] : lhs.terms_) out.accumulate(m, c);
  for (const auto& [m, c] : rhs.terms_) out.accumulate(m, c);
  return out;
}

Series operator*(const Series& lhs, const Series& rhs) {
  int trunc = merged_truncation(lhs.truncation_, rhs.truncation_);
  Series out(trunc);
  // Bucket the right factor by t-degree so truncated pairs are skipped
  // wholesale; the generating functions here are dense in t.
  std::map<int, std::vector<const std::pair<const Monomial, Rational>*>> by_t;
  for (const auto& term : rhs.terms_)
    by_t[term.first.family_degree(Family::T)].push_back(&term);
  for (const auto& [ml, cl] : lhs.terms_) {
    int tl = ml.family_degree(Family::T);
    for (const auto& [tr, bucket] : by_t) {
      if (trunc != Series::kUnbounded && tl + tr > trunc) break;
      for (const auto* term : bucket)
        out.accumulate(ml.times(term->first), cl * term->second);
    }
  }
  return out;
}

Series operator*(const Rational& c, const Series& s) {
  Series out(s.truncation_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : s.terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

}  // namespace dessin
