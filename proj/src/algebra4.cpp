#include "ivalg/algebra4.hpp"

#include <algorithm>
#include <cmath>

namespace ivalg {

A4 a4_add(const A4& x, const A4& y) {
  return {x.x1 + y.x1, x.x2 + y.x2, x.x3 + y.x3, x.x4 + y.x4};
}

A4 a4_sub(const A4& x, const A4& y) {
  return {x.x1 - y.x1, x.x2 - y.x2, x.x3 - y.x3, x.x4 - y.x4};
}

A4 a4_neg(const A4& x) { return {-x.x1, -x.x2, -x.x3, -x.x4}; }

A4 a4_scale(double t, const A4& x) {
  return {t * x.x1, t * x.x2, t * x.x3, t * x.x4};
}

A4 a4_mul(const A4& x, const A4& y) {
  return {x.x1 * y.x1 + x.x4 * y.x4,
          x.x2 * y.x2 + x.x3 * y.x3,
          x.x3 * y.x2 + x.x2 * y.x3,
          x.x4 * y.x1 + x.x1 * y.x4};
}

A4 a4_unit() { return {1.0, 1.0, 0.0, 0.0}; }

double a4_max_abs(const A4& x) {
  return std::max(std::max(std::fabs(x.x1), std::fabs(x.x2)),
                  std::max(std::fabs(x.x3), std::fabs(x.x4)));
}

bool a4_is_invertible(const A4& x, double tol) {
  const double m = a4_max_abs(x);
  const double cutoff = tol * std::max(1.0, m * m);
  return std::fabs(x.x1 * x.x1 - x.x4 * x.x4) > cutoff &&
         std::fabs(x.x2 * x.x2 - x.x3 * x.x3) > cutoff;
}

A4 a4_inverse(const A4& x, double tol) {
  if (!a4_is_invertible(x, tol))
    throw NotInvertible("block determinant vanishes");
  const double d14 = x.x1 * x.x1 - x.x4 * x.x4;
  const double d23 = x.x2 * x.x2 - x.x3 * x.x3;
  return {x.x1 / d14, x.x2 / d23, -x.x3 / d23, -x.x4 / d14};
}

namespace {

enum class Shape { P, M, N, Other };

Shape shape_of(const A4& x, double tol) {
  if (std::fabs(x.x3) <= tol && std::fabs(x.x4) <= tol) return Shape::P;
  if (std::fabs(x.x1) <= tol && std::fabs(x.x4) <= tol) return Shape::M;
  if (std::fabs(x.x1) <= tol && std::fabs(x.x2) <= tol) return Shape::N;
  return Shape::Other;
}

}  // namespace

std::optional<bool> a4_leq(const A4& x, const A4& y, double tol) {
  const Shape sx = shape_of(x, tol);
  const Shape sy = shape_of(y, tol);
  if (sx == Shape::P && sy == Shape::P) return y.x1 <= x.x1 && x.x2 <= y.x2;
  if (sx == Shape::P && sy == Shape::M) return x.x2 <= y.x2;
  if (sx == Shape::M && sy == Shape::M) return x.x3 <= y.x3 && x.x2 <= y.x2;
  if (sx == Shape::N && sy == Shape::M) return x.x3 <= y.x3;
  if (sx == Shape::N && sy == Shape::N) return x.x3 <= y.x3 && y.x4 <= x.x4;
  return std::nullopt;
}

}  // namespace ivalg
