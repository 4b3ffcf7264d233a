#pragma once

#include "ivalg/algebra4.hpp"
#include "ivalg/interval.hpp"

// Sign-case embedding of intervals into the four-dimensional algebra, its odd
// extension to difference classes, the key map collapsing the embedding's
// translation equivalence, and the induced product on classes.

namespace ivalg {

// Endpoint product: [min, max] of the four endpoint products.
Interval classical_mul(Interval x, Interval y);

// Sign-case embedding:
//   0 <= lo:        (lo, hi, 0, 0)
//   lo <= 0 <= hi:  (0, hi, -lo, 0)
//   hi <= 0:        (0, 0, -lo, -hi)
// The overlaps at lo == 0 and hi == 0 agree.
A4 phi(Interval x);

// Odd extension to classes: proper classes go through phi of [inf, sup];
// improper classes are sent to minus the phi image of their mirror.
A4 phi_bar(const GInterval& a);

// Key of the translation equivalence x ~ y iff x1 - y1 = x3 - y3 and
// x2 - y2 = x4 - y4.
struct A4Key {
  double u = 0.0;
  double v = 0.0;
};

A4Key a4_key(const A4& m);

bool r_equivalent(const A4& m, const A4& n, double tol = kTol);

// Class of the key: psi(m) = GInterval(x1 - x3, x2 - x4).  Left inverse of
// phi_bar: psi(phi_bar(a)) == a for every class a.
GInterval psi(const A4& m);

// Whether m equals phi_bar(a) for some class a (within tol).
bool in_phi_bar_image(const A4& m, double tol = kTol);

// Induced product on classes: psi(a4_mul(phi_bar(a), phi_bar(b))).  Agrees
// with the endpoint product whenever at least one operand does not straddle
// zero; for two zero-straddling proper classes [-x1, x2] and [-y1, y2] it
// returns [-(x1*y2 + x2*y1), x2*y2 + x1*y1], which contains the endpoint
// product.
GInterval bullet(const GInterval& a, const GInterval& b);

// Inclusion of proper classes, within tol on both endpoints.  Throws
// DomainError when either argument is improper.
bool contains(const GInterval& outer, const GInterval& inner, double tol = kTol);

}  // namespace ivalg
