#include "dessin/belyi.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// coefficient vectors are lowest-degree-first

VectorXcd mul_linear(const VectorXcd& p, Complex root) {
  VectorXcd out = VectorXcd::Zero(p.size() + 1);
  out.tail(p.size()) += p;
  out.head(p.size()) -= root * p;
  return out;
}

VectorXcd monic_product(const std::vector<VertexPoint>& points) {
  VectorXcd p = VectorXcd::Ones(1);
  for (const auto& v : points)
    for (int i = 0; i < v.degree; ++i) p = mul_linear(p, v.z);
  return p;
}

// exact synthetic division by (z - root); the remainder is discarded
VectorXcd deflate(const VectorXcd& p, Complex root) {
  int n = (int)p.size() - 1;
  VectorXcd q = VectorXcd::Zero(n);
  Complex carry = p[n];
  for (int i = n - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p[i] + root * carry;
  }
  return q;
}

VectorXcd derivative(const VectorXcd& p) {
  VectorXcd out = VectorXcd::Zero(std::max<int>(1, (int)p.size() - 1));
  for (int i = 1; i < p.size(); ++i) out[i - 1] = (double)i * p[i];
  return out;
}

VectorXcd padded(const VectorXcd& p, int size) {
  VectorXcd out = VectorXcd::Zero(size);
  out.head(p.size()) = p;
  return out;
}

}  // namespace

double residual(const BelyiModel& m) {
  int e = m.edges;
  VectorXcd d = padded(monic_product(m.white), e + 1) -
                padded(monic_product(m.black), e + 1);
  d[1] -= m.r;
  d[0] += m.r * m.c;
  return d.cwiseAbs().maxCoeff();
}

double derivative_identity_residual(const BelyiModel& m) {
  int e = m.edges;
  VectorXcd p = monic_product(m.white);
  VectorXcd num =
      padded(mul_linear(derivative(p), m.c), e + 1) - padded(p, e + 1);
  VectorXcd prod = VectorXcd::Ones(1);
  for (const auto& v : m.white)
    for (int i = 0; i < v.degree - 1; ++i) prod = mul_linear(prod, v.z);
  for (const auto& v : m.black)
    for (int i = 0; i < v.degree - 1; ++i) prod = mul_linear(prod, v.z);
  VectorXcd right = Complex(e - 1, 0) * padded(prod, e + 1);
  return (num - right).cwiseAbs().maxCoeff();
}

Complex evaluate(const BelyiModel& m, Complex z) {
  if (z == m.c) throw PoleEvaluation("evaluation at the pole");
  Complex num = 1.0;
  for (const auto& v : m.white)
    for (int i = 0; i < v.degree; ++i) num *= z - v.z;
  return num / (m.r * (z - m.c));
}

namespace {

struct System {
  std::vector<int> white_deg, black_deg;
  int edges;

  int unknowns() const { return (int)(white_deg.size() + black_deg.size()); }

  VectorXcd poly(const VectorXcd& u, bool white) const {
    const auto& deg = white ? white_deg : black_deg;
    int off = white ? 0 : (int)white_deg.size();
    VectorXcd p = VectorXcd::Ones(1);
    for (std::size_t i = 0; i < deg.size(); ++i)
      for (int k = 0; k < deg[i]; ++k) p = mul_linear(p, u[off + i]);
    return p;
  }

  // residual vector: coefficients z^2 .. z^{E-1} of P - Q, then the two
  // canonical sum conditions
  VectorXcd eval(const VectorXcd& u) const {
    VectorXcd d = poly(u, true) - poly(u, false);
    VectorXcd f = VectorXcd::Zero(edges);
    for (int k = 2; k <= edges - 1; ++k) f[k - 2] = d[k];
    Complex sw = 0, sb = 0;
    for (std::size_t i = 0; i < white_deg.size(); ++i)
      if (white_deg[i] > 1) sw += u[i];
    for (std::size_t j = 0; j < black_deg.size(); ++j)
      if (black_deg[j] > 1) sb += u[white_deg.size() + j];
    f[edges - 2] = sw;
    f[edges - 1] = sb - 1.0;
    return f;
  }

  MatrixXcd jacobian(const VectorXcd& u) const {
    MatrixXcd j = MatrixXcd::Zero(edges, unknowns());
    VectorXcd p = poly(u, true);
    VectorXcd q = poly(u, false);
    int w = (int)white_deg.size();
    for (int i = 0; i < unknowns(); ++i) {
      bool white = i < w;
      int deg = white ? white_deg[i] : black_deg[i - w];
      VectorXcd col = deflate(white ? p : q, u[i]);
      double sign = white ? -1.0 : 1.0;  // d(P - Q)
      for (int k = 2; k <= edges - 1; ++k)
        j(k - 2, i) = sign * (double)deg * col[k];
      if (deg > 1) j(white ? edges - 2 : edges - 1, i) = 1.0;
    }
    return j;
  }
};

bool separated(const BelyiModel& m, double separation) {
  auto far = [&](Complex a, Complex b) { return std::abs(a - b) >= separation; };
  for (std::size_t i = 0; i < m.white.size(); ++i)
    for (std::size_t j = i + 1; j < m.white.size(); ++j)
      if (!far(m.white[i].z, m.white[j].z)) return false;
  for (std::size_t i = 0; i < m.black.size(); ++i)
    for (std::size_t j = i + 1; j < m.black.size(); ++j)
      if (!far(m.black[i].z, m.black[j].z)) return false;
  for (const auto& v : m.white)
    if (!far(v.z, m.c)) return false;
  for (const auto& v : m.black)
    if (!far(v.z, m.c)) return false;
  return true;
}

std::vector<VertexPoint> sorted_points(std::vector<VertexPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return pts;
}

bool same_point_set(const std::vector<VertexPoint>& a,
                    const std::vector<VertexPoint>& b, double radius) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& pa : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || b[j].degree != pa.degree) continue;
      if (std::abs(b[j].z - pa.z) < radius) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool model_less(const BelyiModel& a, const BelyiModel& b) {
  auto key = [](const BelyiModel& m) {
    std::vector<double> k;
    for (const auto& side : {m.white, m.black})
      for (const auto& v : sorted_points(side)) {
        k.push_back((double)v.degree);
        k.push_back(v.z.real());
        k.push_back(v.z.imag());
      }
    return k;
  };
  return key(a) < key(b);
}

}  // namespace

std::vector<BelyiModel> solve_canonical(const Passport& p,
                                        const SolveOptions& opts) {
  p.validate();
  auto wdeg = p.white_degrees();
  auto bdeg = p.black_degrees();
  int edges = p.edges();
  bool w2 = std::any_of(wdeg.begin(), wdeg.end(), [](int d) { return d > 1; });
  bool b2 = std::any_of(bdeg.begin(), bdeg.end(), [](int d) { return d > 1; });
  if (!w2 || !b2)
    throw DegeneratePassport(
        "canonical model needs a degree > 1 vertex of each color");
  if ((int)(wdeg.size() + bdeg.size()) != edges)
    throw DegeneratePassport(
        "vertex count must equal edge count (2^1-map passport)");

  System sys{wdeg, bdeg, edges};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);

  std::vector<BelyiModel> found;
  for (int attempt = 0; attempt < opts.starts; ++attempt) {
    VectorXcd u(sys.unknowns());
    for (int i = 0; i < u.size(); ++i) u[i] = Complex(coord(rng), coord(rng));

    bool converged = false;
    double fnorm = sys.eval(u).norm();
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
      VectorXcd f = sys.eval(u);
      VectorXcd step = sys.jacobian(u).partialPivLu().solve(-f);
      if (!step.allFinite()) break;
      double lambda = 1.0;
      VectorXcd next = u + step;
      double nnorm = sys.eval(next).norm();
      int halvings = 0;
      while (nnorm > fnorm && halvings < 40) {
        lambda *= 0.5;
        next = u + lambda * step;
        nnorm = sys.eval(next).norm();
        ++halvings;
      }
      u = next;
      fnorm = nnorm;
      if ((lambda * step).norm() < 1e-12) {
        converged = true;
        break;
      }
    }
    if (!converged || !(fnorm < opts.tol)) continue;

    BelyiModel model;
    model.edges = edges;
    for (std::size_t i = 0; i < wdeg.size(); ++i)
      model.white.push_back({u[i], wdeg[i]});
    for (std::size_t j = 0; j < bdeg.size(); ++j)
      model.black.push_back({u[wdeg.size() + j], bdeg[j]});
    VectorXcd d = padded(sys.poly(u, true) - sys.poly(u, false), edges + 1);
    model.r = d[1];
    if (std::abs(model.r) < 1e-8) continue;
    model.c = -d[0] / model.r;
    if (!separated(model, opts.separation)) continue;
    if (residual(model) > opts.tol) continue;

    bool duplicate = false;
    for (const auto& known : found) {
      if (same_point_set(model.white, known.white, opts.separation) &&
          same_point_set(model.black, known.black, opts.separation)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(std::move(model));
  }
  if (found.empty())
    throw NoSolutionsFound("no Newton start converged for " + p.str());
  std::sort(found.begin(), found.end(), model_less);
  return found;
}

BelyiModel to_canonical(const BelyiModel& m) {
  Complex x_sum = 0, y_sum = 0;
  int k = 0, l = 0;
  for (const auto& v : m.white)
    if (v.degree > 1) {
      x_sum += v.z;
      ++k;
    }
  for (const auto& v : m.black)
    if (v.degree > 1) {
      y_sum += v.z;
      ++l;
    }
  Complex det = x_sum * (double)l - y_sum * (double)k;
  if (std::abs(det) < 1e-12)
    throw SingularNormalization("X*l - Y*k vanished");
  Complex a = Complex(-(double)k) / det;
  Complex b = x_sum / det;

  BelyiModel out = m;
  for (auto& v : out.white) v.z = a * v.z + b;
  for (auto& v : out.black) v.z = a * v.z + b;
  out.c = a * m.c + b;
  out.r = m.r * std::pow(a, m.edges - 1);
  return out;
}

}  // namespace dessin
