#pragma once

#include <optional>

#include "ivalg/interval.hpp"

// Four-dimensional real algebra with basis e1..e4 and products
//   e1*e1 = e1   e1*e4 = e4   e4*e4 = e1
//   e2*e2 = e2   e2*e3 = e3   e3*e3 = e2
// and all cross products between {e1,e4} and {e2,e3} equal to zero.  The
// algebra splits into the ideals span(e1,e4) and span(e2,e3).

namespace ivalg {

struct A4 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;
};

A4 a4_add(const A4& x, const A4& y);
A4 a4_sub(const A4& x, const A4& y);
A4 a4_neg(const A4& x);
A4 a4_scale(double t, const A4& x);
A4 a4_mul(const A4& x, const A4& y);
A4 a4_unit();  // (1, 1, 0, 0)

double a4_max_abs(const A4& x);

// Invertibility needs both block determinants x1^2 - x4^2 and x2^2 - x3^2
// away from zero; the cutoff is tol scaled by max(1, a4_max_abs(x)^2).
bool a4_is_invertible(const A4& x, double tol = kTol);

// Throws NotInvertible when a4_is_invertible fails.
A4 a4_inverse(const A4& x, double tol = kTol);

// Partial order defined case-by-case on the zero patterns
//   P = (x1, x2, 0, 0),  M = (0, x2, x3, 0),  N = (0, 0, x3, x4)
// (detected within tol, preferring P, then M, then N):
//   P <= P  iff  y1 <= x1 and x2 <= y2
//   P <= M  iff  x2 <= y2
//   M <= M  iff  x3 <= y3 and x2 <= y2
//   N <= M  iff  x3 <= y3
//   N <= N  iff  x3 <= y3 and y4 <= x4
// Any other shape pair is not comparable (nullopt).
std::optional<bool> a4_leq(const A4& x, const A4& y, double tol = kTol);

}  // namespace ivalg
