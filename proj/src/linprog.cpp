#include "ivalg/linprog.hpp"

#include <cmath>
#include <string>

namespace ivalg {

namespace {

bool nonnegative_class(const GInterval& g, double tol) {
  return is_proper(g) && g.inf >= -tol;
}

}  // namespace

Tableau standardize(const IntervalLP& lp, double tol) {
  const std::size_t p = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.B.size() != p) throw DomainError("rhs count does not match row count");
  if (!lp.equality.empty() && lp.equality.size() != p)
    throw DomainError("sense list does not match row count");
  for (std::size_t r = 0; r < p; ++r) {
    if (lp.A[r].size() != n)
      throw DomainError("row " + std::to_string(r) + " has wrong width");
    if (!nonnegative_class(lp.B[r], tol))
      throw Infeasible("right-hand side " + std::to_string(r) +
                       " is not a non-negative class");
  }

  std::size_t slacks = 0;
  for (std::size_t r = 0; r < p; ++r)
    if (lp.equality.empty() || !lp.equality[r]) ++slacks;

  Tableau t;
  t.num_vars = static_cast<int>(n);
  t.rows.assign(p, std::vector<double>(n + slacks, 0.0));
  t.rhs = lp.B;
  t.obj.assign(n + slacks, 0.0);
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = lp.c[j];
  t.basis.assign(p, -1);

  std::size_t next_slack = n;
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t j = 0; j < n; ++j) t.rows[r][j] = lp.A[r][j];
    if (lp.equality.empty() || !lp.equality[r]) {
      t.rows[r][next_slack] = 1.0;
      t.basis[r] = static_cast<int>(next_slack);
      ++next_slack;
    }
  }

  // Detect identity columns for equality rows.
  for (std::size_t r = 0; r < p; ++r) {
    if (t.basis[r] >= 0) continue;
    for (std::size_t j = 0; j < n && t.basis[r] < 0; ++j) {
      if (std::fabs(t.rows[r][j] - 1.0) > tol) continue;
      bool identity = true;
      for (std::size_t k = 0; k < p && identity; ++k)
        if (k != r && std::fabs(t.rows[k][j]) > tol) identity = false;
      for (std::size_t k = 0; k < p && identity; ++k)
        if (t.basis[k] == static_cast<int>(j)) identity = false;
      if (identity) t.basis[r] = static_cast<int>(j);
    }
    if (t.basis[r] < 0)
      throw DomainError("equality row " + std::to_string(r) +
                        " has no identity column");
  }

  // Reduce the objective row against the starting basis.
  for (std::size_t r = 0; r < p; ++r) {
    const double f = t.obj[static_cast<std::size_t>(t.basis[r])];
    if (std::fabs(f) <= tol) continue;
    for (std::size_t j = 0; j < t.obj.size(); ++j) t.obj[j] -= f * t.rows[r][j];
  }
  return t;
}

PivotChoice select_pivot(const Tableau& t, double tol) {
  int col = -1;
  double best = tol;
  for (std::size_t j = 0; j < t.obj.size(); ++j) {
    if (t.obj[j] > best) {
      best = t.obj[j];
      col = static_cast<int>(j);
    }
  }
  if (col < 0) return {PivotStatus::NoImprovingColumn, -1, -1};

  int row = -1;
  double best_len = 0.0, best_inf = 0.0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double a = t.rows[r][static_cast<std::size_t>(col)];
    if (a <= tol) continue;
    const double ratio_len = length(t.rhs[r]) / a;
    const double ratio_inf = t.rhs[r].inf / a;
    if (row < 0 || ratio_len < best_len ||
        (ratio_len == best_len && ratio_inf < best_inf)) {
      row = static_cast<int>(r);
      best_len = ratio_len;
      best_inf = ratio_inf;
    }
  }
  if (row < 0) return {PivotStatus::Unbounded, -1, col};
  return {PivotStatus::Found, row, col};
}

void apply_pivot(Tableau& t, int row, int col, double tol) {
  const std::size_t r0 = static_cast<std::size_t>(row);
  const std::size_t c0 = static_cast<std::size_t>(col);
  const double piv = t.rows[r0][c0];
  if (!(piv > tol)) throw NumericalPivot("pivot entry below tolerance");

  for (double& v : t.rows[r0]) v /= piv;
  t.rhs[r0] = scalar_mul(1.0 / piv, t.rhs[r0]);
  t.rows[r0][c0] = 1.0;

  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r == r0) continue;
    const double f = t.rows[r][c0];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < t.rows[r].size(); ++j)
      t.rows[r][j] -= f * t.rows[r0][j];
    t.rows[r][c0] = 0.0;
    t.rhs[r] = sub(t.rhs[r], scalar_mul(f, t.rhs[r0]));
  }

  const double f = t.obj[c0];
  if (f != 0.0) {
    for (std::size_t j = 0; j < t.obj.size(); ++j) t.obj[j] -= f * t.rows[r0][j];
    t.obj[c0] = 0.0;
  }
  t.basis[r0] = col;
}

LPSolution solve(const IntervalLP& lp, double tol) {
  Tableau t = standardize(lp, tol);
  LPSolution sol;
  sol.num_vars = static_cast<int>(lp.c.size());
  sol.status = LPStatus::IterationLimit;
  for (int iter = 0; iter < lp.max_iter; ++iter) {
    const PivotChoice choice = select_pivot(t, tol);
    if (choice.status == PivotStatus::NoImprovingColumn) {
      sol.status = LPStatus::Optimal;
      break;
    }
    if (choice.status == PivotStatus::Unbounded) {
      sol.status = LPStatus::Unbounded;
      break;
    }
    apply_pivot(t, choice.row, choice.col, tol);
    sol.trace.push_back({choice.row, choice.col});
  }
  sol.assignment.assign(t.obj.size(), GInterval{0.0, 0.0});
  for (std::size_t r = 0; r < t.basis.size(); ++r)
    sol.assignment[static_cast<std::size_t>(t.basis[r])] = t.rhs[r];
  GInterval obj{0.0, 0.0};
  for (std::size_t j = 0; j < lp.c.size(); ++j)
    obj = add(obj, scalar_mul(lp.c[j], sol.assignment[j]));
  sol.objective_value = obj;
  return sol;
}

}  // namespace ivalg
