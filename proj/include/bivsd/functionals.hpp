#pragma once

#include "bivsd/empirical.hpp"

namespace bivsd {

// H(x,y) = integral of the empirical cdf over [0,x]x[0,y], in closed form:
// (1/n) sum_i (x - x_i)+ (y - y_i)+. Exact, no quadrature error.
double h_at(const BivariateSample& s, double x, double y);

// H^X(v) = (1/n) sum_i (v - x_i)+ (resp. H^Y with y_i).
double h_marginal_at(const BivariateSample& s, Axis axis, double v);

// L(x,y) = integral of K over [0,x]x[0,y], via the identity
// L = y*H^X(x) + x*H^Y(y) - H(x,y) obtained by integrating K termwise.
double l_at(const BivariateSample& s, double x, double y);

enum class FunctionalKind {
  delta_h,  // H_a - H_b
  delta_l,  // L_a - L_b
};

// Exact supremum of the chosen functional difference over [0,1]^2. On each
// grid cell the difference is bilinear in (x,y), and a bilinear function on
// a rectangle peaks at a vertex, so the vertex maximum is the supremum.
// Ties resolve to the lexicographically smallest (x, y).
SupremumResult sup_delta_functional(FunctionalKind kind,
                                    const BivariateSample& a,
                                    const BivariateSample& b,
                                    const CombinedGrid& grid);

// Exact supremum of H^axis_a - H^axis_b over [0,1]; piecewise linear with
// vertices on the grid axis, so the vertex maximum is the supremum.
SupremumResult1D sup_delta_h_marginal(Axis axis, const BivariateSample& a,
                                      const BivariateSample& b,
                                      const CombinedGrid& grid);

}  // namespace bivsd
