#pragma once

#include <array>

#include "ivalg/errors.hpp"

// Generalized intervals: difference classes of pairs of proper intervals,
// stored in canonical coordinates (inf, sup).  inf <= sup corresponds to a
// proper interval, inf > sup to the additive inverse of one, inf == sup to a
// real number.  The class set is a normed vector space under the operations
// below.

namespace ivalg {

inline constexpr double kTol = 1e-12;

// Proper interval [lo, hi], lo <= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Validating constructor; throws ImproperEndpoints if lo > hi.
Interval make_interval(double lo, double hi);

// Difference class in canonical coordinates.
struct GInterval {
  double inf = 0.0;
  double sup = 0.0;
};

// Class of the pair (x, y): coordinates (x.lo - y.lo, x.hi - y.hi).
GInterval class_of(Interval x, Interval y);

// Class of the pair (x, [0,0]).
GInterval to_class(Interval x);

bool is_proper(const GInterval& a);
bool is_improper(const GInterval& a);
bool is_scalar(const GInterval& a, double tol = kTol);
bool is_zero(const GInterval& a, double tol = kTol);

// The proper interval [inf, sup]; throws DomainError when improper.
Interval proper_part(const GInterval& a);

// The proper interval K with a = -class(K); throws DomainError when proper.
Interval mirror_part(const GInterval& a);

enum class SignKind { Positive, Negative, Scalar };

struct SignClass {
  SignKind kind = SignKind::Scalar;
  double value = 0.0;  // meaningful only when kind == Scalar
};

// Positive when inf < sup, Negative when inf > sup, Scalar(inf) within tol.
SignClass sign_of(const GInterval& a, double tol = kTol);

GInterval add(const GInterval& a, const GInterval& b);
GInterval sub(const GInterval& a, const GInterval& b);
GInterval neg(const GInterval& a);
GInterval scalar_mul(double t, const GInterval& a);

inline GInterval operator+(const GInterval& a, const GInterval& b) { return add(a, b); }
inline GInterval operator-(const GInterval& a, const GInterval& b) { return sub(a, b); }
inline GInterval operator-(const GInterval& a) { return neg(a); }
inline GInterval operator*(double t, const GInterval& a) { return scalar_mul(t, a); }
inline GInterval operator*(const GInterval& a, double t) { return scalar_mul(t, a); }

double length(const GInterval& a);  // |sup - inf|
double center(const GInterval& a);  // (inf + sup) / 2
double norm(const GInterval& a);    // length + |center|
double distance(const GInterval& a, const GInterval& b);

// Open-ball membership: distance(c, a) < eps.
bool ball_contains(const GInterval& c, double eps, const GInterval& a);

// Coordinates in the basis {class([0,1]), class([1,1])}:
// a = u1 * class([0,1]) + u2 * class([1,1]).
struct BasisCoords {
  double u1 = 0.0;
  double u2 = 0.0;
};

BasisCoords basis_coordinates(const GInterval& a);
GInterval from_basis(const BasisCoords& c);

// Vertices of the eps-neighborhood of a positive class (a, b) with 0 <= a,
// listed counterclockwise in the (inf, sup) plane.  The closed region they
// bound is exactly the closed eps-ball of the norm.
struct Parallelogram {
  std::array<std::array<double, 2>, 4> vertex{};
};

Parallelogram neighborhood_vertices(const GInterval& x0, double eps);

}  // namespace ivalg
