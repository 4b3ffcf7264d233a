#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ivalg/interval.hpp"

// Elementary analysis over difference classes: the square map, polynomial
// evaluation through bullet powers, an empirical continuity probe, and a
// differentiability probe measuring remainder ratios against a linear
// candidate.

namespace ivalg {

using ClassMap = std::function<GInterval(const GInterval&)>;

// Square map.  On a proper [a, b]: [a^2, b^2] when 0 <= a, [b^2, a^2] when
// b <= 0, and [0, max(a^2, b^2)] when a < 0 < b.  On an improper class it is
// the square of the mirror class, so q2(-class(K)) == q2(class(K)).
GInterval q2(const GInterval& a);

// f(X) = coeffs[0] * class([1,1]) + sum_i coeffs[i] * X^i with bullet powers
// and vector-space scaling of the coefficients.
GInterval poly_eval(const std::vector<double>& coeffs, const GInterval& x);

// Boundary cones of the unit ball used to pick probe directions.
enum class DirectionCone {
  All,            // full boundary of the unit ball (a parallelogram)
  Widening,       // 0 < d.inf < d.sup: both endpoints grow, upper faster
  LowerDominant,  // d.inf < 0 < d.sup with |d.inf| > d.sup
};

// count unit-norm directions in the cone.  For All, the four ball vertices
// (1,1), (1/2,-1/2), (-1,-1), (-1/2,1/2) are included when 4 divides count.
std::vector<GInterval> unit_directions(int count, DirectionCone cone);

struct ProbeGrid {
  int directions = 32;
  int radial_steps = 8;
  int ladder_steps = 24;
};

// Largest eta from the geometric ladder {eps, eps/2, eps/4, ...} such that
// every grid sample strictly inside the eta-ball of x0 maps strictly inside
// the eps-ball of f(x0).  Grid evidence, not a proof.  nullopt when even the
// smallest candidate fails.
std::optional<double> continuity_probe(const ClassMap& f,
                                       const GInterval& x0,
                                       double eps,
                                       const ProbeGrid& grid = {});

// Linear candidate for the derivative of the square map at x0:
// L(D) = 2 * bullet(x0, D).
ClassMap differential_candidate(const GInterval& x0);

struct ProbeRow {
  double radius = 0.0;
  double worst_ratio = 0.0;
  GInterval witness;  // sample point realizing worst_ratio
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
};

// For each radius t, the worst remainder ratio
//   norm(f(X) - f(x0) - L(X - x0)) / norm(X - x0)
// over X = x0 + t * d for the given unit directions d.
ProbeReport diff_probe(const ClassMap& f,
                       const GInterval& x0,
                       const ClassMap& L,
                       const std::vector<double>& radii,
                       const std::vector<GInterval>& directions);

// Geometric radius ladder {first, first*step, ...} of the given size.
std::vector<double> default_radii(double first = 1e-2, int count = 5, double step = 0.1);

// CSV with header radius,worst_ratio,witness_inf,witness_sup.
std::string to_csv(const ProbeReport& report);

}  // namespace ivalg
