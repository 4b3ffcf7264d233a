#pragma once

#include <array>
#include <vector>

#include "ivalg/interval.hpp"

// Simplex over interval-valued right-hand sides: real coefficient matrix and
// objective, class-valued constraints.  The ratio test orders rows by the
// length of the right-hand side, with the lower endpoint as tie-break, which
// keeps every right-hand side a non-negative class throughout.

namespace ivalg {

struct IntervalLP {
  std::vector<std::vector<double>> A;  // p x n coefficients
  std::vector<GInterval> B;            // p right-hand sides, non-negative classes
  std::vector<double> c;               // n objective coefficients (maximize)
  std::vector<bool> equality;          // per row; empty means all inequalities
  int max_iter = 100;
};

struct Tableau {
  std::vector<std::vector<double>> rows;  // p x (n + slacks)
  std::vector<GInterval> rhs;             // p classes
  std::vector<double> obj;                // reduced-cost row
  std::vector<int> basis;                 // basis[r] = basic column of row r
  int num_vars = 0;                       // caller columns, before slacks
};

// Appends one slack column per inequality row (initial basis), detects
// identity columns for equality rows, and reduces the objective row against
// the basis.  Throws Infeasible when a right-hand side is a negative class
// or has a lower endpoint below -tol, and DomainError on shape mismatches or
// an equality row without an identity column.
Tableau standardize(const IntervalLP& lp, double tol = kTol);

enum class PivotStatus { Found, NoImprovingColumn, Unbounded };

struct PivotChoice {
  PivotStatus status = PivotStatus::NoImprovingColumn;
  int row = -1;
  int col = -1;
};

// Column: largest positive reduced cost, lowest index on ties.  Row: smallest
// length(rhs)/entry over positive column entries, ties broken by smallest
// inf(rhs)/entry, then lowest index.  Unbounded when the chosen column has no
// positive entry.
PivotChoice select_pivot(const Tableau& t, double tol = kTol);

// Scales the pivot row by the pivot entry and eliminates the column from the
// other rows and the objective row.  Throws NumericalPivot when the pivot
// entry is not above tol.
void apply_pivot(Tableau& t, int row, int col, double tol = kTol);

enum class LPStatus { Optimal, Unbounded, IterationLimit };

struct LPSolution {
  LPStatus status = LPStatus::IterationLimit;
  std::vector<GInterval> assignment;    // one class per tableau column
  GInterval objective_value;
  std::vector<std::array<int, 2>> trace;  // (row, col) per pivot
  int num_vars = 0;
};

// Full solve loop: basic variables take their right-hand side class, the
// rest are zero; objective_value = sum of c[i] * assignment[i].
LPSolution solve(const IntervalLP& lp, double tol = kTol);

}  // namespace ivalg
