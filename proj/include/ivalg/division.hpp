#pragma once

#include "ivalg/interval.hpp"

// Division of difference classes: solve dividend = divisor (bullet) Z exactly
// when the ratio conditions allow, otherwise Euclidean-style with a scalar or
// zero-straddling remainder, so that
//   add(bullet(divisor, quotient), remainder) == dividend.

namespace ivalg {

struct DivisionResult {
  GInterval quotient;
  GInterval remainder;  // zero class when exact
  bool exact = false;
};

// Exact division of positive proper classes.  Writing divisor = [x1, x2] and
// dividend = [y1, y2] with 0 < x1 and 0 <= y1, requires y2/y1 >= x2/x1 and
// returns [y1/x1, y2/x2].  Throws RatioConditionFailed when the Euclidean
// family applies instead.
DivisionResult div_exact_positive(const GInterval& dividend,
                                  const GInterval& divisor,
                                  double tol = kTol);

// Exact division of zero-straddling proper classes [-x1, x2] and [-y1, y2]
// (all of x1, x2, y1, y2 positive).  Solvable when y2/y1 and y1/y2 lie on the
// same side of x1/x2 as prescribed by the sign of x1 - x2; the quotient is
// [-z3, z2] with
//   z2 = (x1*y1 - x2*y2) / (x1^2 - x2^2)
//   z3 = (x1*y2 - x2*y1) / (x1^2 - x2^2).
// Throws CenteredDivisor when x1 == x2 and RatioConditionFailed when the
// side conditions fail.
DivisionResult div_exact_zero_containing(const GInterval& dividend,
                                         const GInterval& divisor,
                                         double tol = kTol);

// Euclidean division of positive proper classes, for x1/x2 < y1/y2 and
// x1 < x2: scalar quotient (y2-y1)/(x2-x1) and scalar remainder
// (x2*y1 - x1*y2)/(x2-x1).  Throws DegenerateDivisor when x1 == x2 and
// RatioConditionFailed when exact division applies.
DivisionResult euclid_positive(const GInterval& dividend,
                               const GInterval& divisor,
                               double tol = kTol);

// Euclidean division of zero-straddling proper classes [-x1, x2], [-y1, y2]
// in the treated case x1 > x2 with y2/y1 < x1/x2 < y1/y2: quotient
// [-y2/x1, 0] and remainder [-(x1*y1 - x2*y2)/x1, 0].  Throws
// PreconditionFailed naming the violated inequality.
DivisionResult euclid_zero_containing(const GInterval& dividend,
                                      const GInterval& divisor,
                                      double tol = kTol);

// Dispatcher.  Tries, in order: positive exact, positive Euclidean,
// zero-straddling exact, zero-straddling Euclidean.  Throws CenteredDivisor
// for a zero-centered divisor and Unsupported for sign patterns outside the
// four families (including the mirrored zero-straddling Euclidean case
// x1 < x2).
DivisionResult divide(const GInterval& dividend,
                      const GInterval& divisor,
                      double tol = kTol);

}  // namespace ivalg
