#pragma once

#include <map>

#include "dessin/passport.hpp"
#include "dessin/series.hpp"

namespace dessin {

// The generating functions for plane bipartite trees and 2^1-maps.
//
// series_A/_B are the one-color building blocks; series_T keeps exactly the
// tree-shaped terms of their product (deg x = deg y = deg t - 1) plus the
// single-vertex terms a0*t and b0*t; series_M doubles one edge via the
// operators below and multiplies the two marked-tree series.

Series series_A(int max_t);
Series series_B(int max_t);
Series series_T(int max_t);

// Linear operator a_k -> a_{k+2} * x with factor 1 for k in {0,1} and k for
// k >= 2 (one application per a_k factor, product rule on powers).
Series apply_Da(const Series& s);
Series apply_Db(const Series& s);

Series series_M(int max_t);

// Coefficient of the passport's monomial in series_M; always integral.
Integer passport_count(const Passport& p);

// The full t^edges x^edges slice of M, keyed by passport. The second form
// reuses a precomputed series_M(max_t) with max_t >= edges.
std::map<Passport, Integer> map_counts(int edges);
std::map<Passport, Integer> map_counts(int edges, const Series& M);

}  // namespace dessin
