#include "ivalg/division.hpp"

#include <cmath>

namespace ivalg {

namespace {

bool positive_pattern(const GInterval& g, double tol) {
  return is_proper(g) && g.inf >= -tol;
}

bool straddles_zero(const GInterval& g, double tol) {
  return g.inf < -tol && g.sup > tol;
}

GInterval zero_class() { return {0.0, 0.0}; }

}  // namespace

DivisionResult div_exact_positive(const GInterval& dividend,
                                  const GInterval& divisor,
                                  double tol) {
  if (!positive_pattern(divisor, tol) || !positive_pattern(dividend, tol))
    throw DomainError("exact positive division expects positive proper classes");
  const double x1 = divisor.inf, x2 = divisor.sup;
  const double y1 = dividend.inf, y2 = dividend.sup;
  if (x1 <= tol)
    throw DomainError("divisor lower endpoint must be positive");
  if (y2 * x1 < x2 * y1)
    throw RatioConditionFailed("y2/y1 < x2/x1: Euclidean division applies");
  return {{y1 / x1, y2 / x2}, zero_class(), true};
}

DivisionResult div_exact_zero_containing(const GInterval& dividend,
                                         const GInterval& divisor,
                                         double tol) {
  if (!straddles_zero(divisor, tol) || !straddles_zero(dividend, tol))
    throw DomainError("exact zero-straddling division expects classes straddling zero");
  const double x1 = -divisor.inf, x2 = divisor.sup;
  const double y1 = -dividend.inf, y2 = dividend.sup;
  if (std::fabs(x1 - x2) <= tol)
    throw CenteredDivisor("zero-centered divisor");
  // Boundary equality is admitted: one quotient endpoint lands on zero.
  if (x1 < x2) {
    if (!(x1 * y1 <= x2 * y2 && x1 * y2 <= x2 * y1))
      throw RatioConditionFailed("y2/y1 and y1/y2 must both exceed x1/x2");
  } else {
    if (!(x1 * y1 >= x2 * y2 && x1 * y2 >= x2 * y1))
      throw RatioConditionFailed("y2/y1 and y1/y2 must both be below x1/x2");
  }
  const double denom = x1 * x1 - x2 * x2;
  const double z2 = (x1 * y1 - x2 * y2) / denom;
  const double z3 = (x1 * y2 - x2 * y1) / denom;
  return {{-z3, z2}, zero_class(), true};
}

DivisionResult euclid_positive(const GInterval& dividend,
                               const GInterval& divisor,
                               double tol) {
  if (!positive_pattern(divisor, tol) || !positive_pattern(dividend, tol))
    throw DomainError("Euclidean positive division expects positive proper classes");
  const double x1 = divisor.inf, x2 = divisor.sup;
  const double y1 = dividend.inf, y2 = dividend.sup;
  if (x2 - x1 <= tol)
    throw DegenerateDivisor("point divisor has no Euclidean form");
  if (x1 * y2 >= x2 * y1)
    throw RatioConditionFailed("x1/x2 >= y1/y2: exact division applies");
  const double q = (y2 - y1) / (x2 - x1);
  const double r = (x2 * y1 - x1 * y2) / (x2 - x1);
  return {{q, q}, {r, r}, false};
}

DivisionResult euclid_zero_containing(const GInterval& dividend,
                                      const GInterval& divisor,
                                      double tol) {
  if (!straddles_zero(divisor, tol) || !straddles_zero(dividend, tol))
    throw DomainError("Euclidean zero-straddling division expects classes straddling zero");
  const double x1 = -divisor.inf, x2 = divisor.sup;
  const double y1 = -dividend.inf, y2 = dividend.sup;
  if (!(x1 > x2 + tol)) throw PreconditionFailed("requires x1 > x2");
  if (!(x1 * y1 > x2 * y2)) throw PreconditionFailed("requires x1/x2 > y2/y1");
  if (!(x1 * y2 < x2 * y1)) throw PreconditionFailed("requires x1/x2 < y1/y2");
  const GInterval quotient{-y2 / x1, 0.0};
  const GInterval remainder{-(x1 * y1 - x2 * y2) / x1, 0.0};
  return {quotient, remainder, false};
}

DivisionResult divide(const GInterval& dividend,
                      const GInterval& divisor,
                      double tol) {
  if (positive_pattern(divisor, tol) && positive_pattern(dividend, tol)) {
    const double x1 = divisor.inf, x2 = divisor.sup;
    const double y1 = dividend.inf, y2 = dividend.sup;
    if (x1 > tol && y2 * x1 >= x2 * y1)
      return div_exact_positive(dividend, divisor, tol);
    if (x2 - x1 > tol && x1 * y2 < x2 * y1)
      return euclid_positive(dividend, divisor, tol);
    throw Unsupported("positive operands fit neither division family");
  }
  if (straddles_zero(divisor, tol) && straddles_zero(dividend, tol)) {
    const double x1 = -divisor.inf, x2 = divisor.sup;
    const double y1 = -dividend.inf, y2 = dividend.sup;
    if (std::fabs(x1 - x2) <= tol) throw CenteredDivisor("zero-centered divisor");
    const bool exact_ok = (x1 < x2) ? (x1 * y1 <= x2 * y2 && x1 * y2 <= x2 * y1)
                                    : (x1 * y1 >= x2 * y2 && x1 * y2 >= x2 * y1);
    if (exact_ok) return div_exact_zero_containing(dividend, divisor, tol);
    if (x1 > x2 + tol && x1 * y1 > x2 * y2 && x1 * y2 < x2 * y1)
      return euclid_zero_containing(dividend, divisor, tol);
    throw Unsupported("zero-straddling operands outside the treated cases");
  }
  throw Unsupported("operand sign pattern has no division rule");
}

}  // namespace ivalg
