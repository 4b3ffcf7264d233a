#include "ivalg/interval.hpp"

#include <cmath>

namespace ivalg {

Interval make_interval(double lo, double hi) {
  if (lo > hi) throw ImproperEndpoints("interval endpoints out of order");
  return {lo, hi};
}

GInterval class_of(Interval x, Interval y) {
  return {x.lo - y.lo, x.hi - y.hi};
}

GInterval to_class(Interval x) {
  return {x.lo, x.hi};
}

bool is_proper(const GInterval& a) { return a.inf <= a.sup; }

bool is_improper(const GInterval& a) { return a.inf > a.sup; }

bool is_scalar(const GInterval& a, double tol) {
  return std::fabs(a.inf - a.sup) <= tol;
}

bool is_zero(const GInterval& a, double tol) {
  return std::fabs(a.inf) <= tol && std::fabs(a.sup) <= tol;
}

Interval proper_part(const GInterval& a) {
  if (!is_proper(a)) throw DomainError("class is not a proper interval");
  return {a.inf, a.sup};
}

Interval mirror_part(const GInterval& a) {
  if (!is_improper(a)) throw DomainError("class is not improper");
  return {-a.inf, -a.sup};
}

SignClass sign_of(const GInterval& a, double tol) {
  if (std::fabs(a.inf - a.sup) <= tol) return {SignKind::Scalar, a.inf};
  if (a.inf < a.sup) return {SignKind::Positive, 0.0};
  return {SignKind::Negative, 0.0};
}

GInterval add(const GInterval& a, const GInterval& b) {
  return {a.inf + b.inf, a.sup + b.sup};
}

GInterval sub(const GInterval& a, const GInterval& b) {
  return {a.inf - b.inf, a.sup - b.sup};
}

GInterval neg(const GInterval& a) { return {-a.inf, -a.sup}; }

GInterval scalar_mul(double t, const GInterval& a) {
  return {t * a.inf, t * a.sup};
}

double length(const GInterval& a) { return std::fabs(a.sup - a.inf); }

double center(const GInterval& a) { return (a.inf + a.sup) / 2.0; }

double norm(const GInterval& a) { return length(a) + std::fabs(center(a)); }

double distance(const GInterval& a, const GInterval& b) {
  return norm(sub(a, b));
}

bool ball_contains(const GInterval& c, double eps, const GInterval& a) {
  return distance(c, a) < eps;
}

BasisCoords basis_coordinates(const GInterval& a) {
  return {a.sup - a.inf, a.inf};
}

GInterval from_basis(const BasisCoords& c) {
  return {c.u2, c.u1 + c.u2};
}

Parallelogram neighborhood_vertices(const GInterval& x0, double eps) {
  if (!(eps > 0.0)) throw DomainError("neighborhood radius must be positive");
  if (!is_proper(x0) || x0.inf < 0.0)
    throw DomainError("neighborhood center must be a positive class with inf >= 0");
  const double a = x0.inf, b = x0.sup;
  Parallelogram p;
  p.vertex[0] = {a - eps, b - eps};
  p.vertex[1] = {a + eps / 2.0, b - eps / 2.0};
  p.vertex[2] = {a + eps, b + eps};
  p.vertex[3] = {a - eps / 2.0, b + eps / 2.0};
  return p;
}

}  // namespace ivalg
