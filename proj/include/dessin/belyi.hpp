#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dessin/passport.hpp"

namespace dessin {

using Complex = std::complex<double>;

struct VertexPoint {
  Complex z;
  int degree;
};

// Numeric data of a degree-E Belyi function P(z) / (r (z - c)) with white
// vertices (roots of P, value 0) and black vertices (value 1).
struct BelyiModel {
  std::vector<VertexPoint> white;
  std::vector<VertexPoint> black;
  Complex c;  // the pole inside the 2-gon
  Complex r;
  int edges = 0;
};

// Max absolute coefficient of P(z) - r(z - c) - Q(z) where P, Q are the
// monic vertex products; 0 means the defining identity holds exactly.
double residual(const BelyiModel& m);

// Max coefficient deviation between numerator(beta') = P'(z-c) - P and
// (E-1) * prod (z-x_i)^{k_i-1} prod (z-y_j)^{l_j-1}.
double derivative_identity_residual(const BelyiModel& m);

// prod (z - x_i)^{k_i} / (r (z - c)); throws PoleEvaluation at z == c.
Complex evaluate(const BelyiModel& m, Complex z);

struct SolveOptions {
  int starts = 500;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int max_iterations = 200;
  double separation = 1e-6;  // coincident-root rejection and dedup radius
};

// Solves the coefficient-matching system for the canonical model (white
// degree>1 coordinate sum 0, black sum 1) by damped Newton iteration from
// seeded random starts; returns the deduplicated solutions sorted by a
// canonical key. Throws DegeneratePassport when no degree exceeds 1 on one
// side, NoSolutionsFound when every start diverges.
std::vector<BelyiModel> solve_canonical(const Passport& p,
                                        const SolveOptions& opts = {});

// Affine change z -> a*z + b enforcing the two canonical sums; r is rescaled
// so the defining identity is preserved. Throws SingularNormalization.
BelyiModel to_canonical(const BelyiModel& m);

}  // namespace dessin
