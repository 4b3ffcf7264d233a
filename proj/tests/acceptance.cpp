// End-to-end acceptance checks.  Each check prints one [PASS]/[FAIL] line;
// the process exits non-zero if any check fails.
//
// Usage: acceptance <path-to-cli> <golden-dir>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ivalg/analysis.hpp"
#include "ivalg/division.hpp"
#include "ivalg/embedding.hpp"
#include "ivalg/linprog.hpp"
#include "ivalg/text.hpp"

using namespace ivalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool near(const GInterval& a, const GInterval& b, double tol) {
  return near(a.inf, b.inf, tol) && near(a.sup, b.sup, tol);
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x9e3779b97f4a7c15u);
  return gen;
}

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

int randint(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng()); }

GInterval random_class(double span = 10.0) {
  return {uniform(-span, span), uniform(-span, span)};
}

GInterval random_proper(double span = 10.0) {
  double a = uniform(-span, span), b = uniform(-span, span);
  if (a > b) std::swap(a, b);
  return {a, b};
}

GInterval random_straddling(double mag = 5.0) {
  return {-uniform(0.05, mag), uniform(0.05, mag)};
}

// 1. Sum of a positive and a negative class: the odd embedding of the sum
// differs from the sum of the embeddings, but both carry the same key, and
// the summed image leaves the embedded set.
Outcome check_embedding_sum() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();

  const GInterval x1{2, 4};
  const GInterval x2 = neg(GInterval{1, 6});
  const GInterval s = add(x1, x2);
  expect(o, near(s, GInterval{1, -2}, 1e-12), "sum coordinates");

  const A4 direct = phi_bar(s);
  expect(o,
         near(direct.x1, 0, 1e-12) && near(direct.x2, -2, 1e-12) &&
             near(direct.x3, -1, 1e-12) && near(direct.x4, 0, 1e-12),
         "embedding of the sum");

  const A4 summed = a4_add(phi_bar(x1), phi_bar(x2));
  expect(o,
         near(summed.x1, 1, 1e-12) && near(summed.x2, -2, 1e-12) &&
             near(summed.x3, 0, 1e-12) && near(summed.x4, 0, 1e-12),
         "sum of embeddings");

  const A4Key k = a4_key(summed);
  expect(o, near(k.u, 1, 1e-12) && near(k.v, -2, 1e-12), "key of the sum");
  expect(o, r_equivalent(direct, summed, 1e-12), "key equivalence");
  expect(o, in_phi_bar_image(direct), "direct image membership");
  expect(o, !in_phi_bar_image(summed), "summed element must leave the image");
  expect(o, near(psi(summed), s, 1e-12), "projection back to the class");

  expect(o, ms_since(t0) < 1.0, "runtime above 1 ms");
  return o;
}

// 2. Exact division by a zero-straddling divisor, with reconstruction.
Outcome check_exact_division() {
  Outcome o;
  const GInterval y{-2, 3};
  const GInterval x{-4, 2};
  const DivisionResult r = divide(y, x);
  expect(o, r.exact, "path must be exact");
  expect(o, near(r.quotient, GInterval{-2.0 / 3.0, 1.0 / 6.0}, 1e-12), "quotient");
  expect(o, near(r.remainder, GInterval{0, 0}, 1e-12), "remainder");
  expect(o, near(add(bullet(x, r.quotient), r.remainder), y, 1e-12), "reconstruction");
  return o;
}

// 3. Euclidean division with point quotient and remainder.
Outcome check_euclidean_division() {
  Outcome o;
  const GInterval y{1, 3};
  const GInterval x{1, 4};
  const DivisionResult r = divide(y, x);
  expect(o, !r.exact, "path must be Euclidean");
  expect(o, near(r.quotient, GInterval{2.0 / 3.0, 2.0 / 3.0}, 1e-12), "quotient");
  expect(o, near(r.remainder, GInterval{1.0 / 3.0, 1.0 / 3.0}, 1e-12), "remainder");
  expect(o, near(add(bullet(x, r.quotient), r.remainder), y, 1e-12), "reconstruction");
  return o;
}

// 4. Norm axioms, triangle inequality, and submultiplicativity of the bullet
// product on proper classes, with equality for point factors.
Outcome check_norm_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 100000 && o.pass; ++i) {
    const GInterval a = random_class();
    const GInterval b = random_class();
    const double t = uniform(-4, 4);

    expect(o, norm(a) >= 0.0, "norm must be non-negative");
    if (!is_zero(a)) expect(o, norm(a) > 0.0, "norm must separate points");
    expect(o, near(norm(scalar_mul(t, a)), std::fabs(t) * norm(a), 1e-9),
           "absolute homogeneity");
    expect(o, norm(add(a, b)) <= norm(a) + norm(b) + 1e-9, "triangle inequality");

    const GInterval x = random_proper();
    const GInterval y = random_proper();
    expect(o, norm(bullet(x, y)) <= norm(x) * norm(y) + 1e-9, "submultiplicativity");

    const GInterval pt{t, t};
    expect(o, near(norm(bullet(pt, y)), std::fabs(t) * norm(y), 1e-9),
           "equality for a point factor");
  }
  expect(o, ms_since(t0) < 5000.0, "runtime above 5 s");
  return o;
}

// 5. Vector space compatibility laws for scalars, 1e-12 relative.
Outcome check_vector_space_suite() {
  Outcome o;
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const double al = uniform(-5, 5);
    const double be = uniform(-5, 5);
    const GInterval x = random_class();
    const GInterval y = random_class();
    const double scale =
        std::max(1.0, (std::fabs(al) + std::fabs(be)) * (norm(x) + norm(y)));

    expect(o,
           near(scalar_mul(al, add(x, y)), add(scalar_mul(al, x), scalar_mul(al, y)),
                1e-12 * scale),
           "distributivity over class addition");
    expect(o,
           near(scalar_mul(al + be, x), add(scalar_mul(al, x), scalar_mul(be, x)),
                1e-12 * scale),
           "distributivity over scalar addition");
    expect(o, near(scalar_mul(al * be, x), scalar_mul(al, scalar_mul(be, x)), 1e-12 * scale),
           "scalar associativity");
  }
  return o;
}

// 6. Algebra laws and inverse round trips.
Outcome check_algebra_suite() {
  Outcome o;
  const auto rand_a4 = [] {
    return A4{uniform(-5, 5), uniform(-5, 5), uniform(-5, 5), uniform(-5, 5)};
  };
  const auto near_a4 = [](const A4& a, const A4& b, double tol) {
    return near(a.x1, b.x1, tol) && near(a.x2, b.x2, tol) && near(a.x3, b.x3, tol) &&
           near(a.x4, b.x4, tol);
  };

  const A4 e1e2 = a4_mul(A4{1, 0, 0, 0}, A4{0, 1, 0, 0});
  expect(o, e1e2.x1 == 0.0 && e1e2.x2 == 0.0 && e1e2.x3 == 0.0 && e1e2.x4 == 0.0,
         "orthogonal idempotents must annihilate");

  for (int i = 0; i < 10000 && o.pass; ++i) {
    const A4 x = rand_a4();
    const A4 y = rand_a4();
    const A4 z = rand_a4();
    const double scale = std::max(1.0, a4_max_abs(x) * a4_max_abs(y) * a4_max_abs(z));
    expect(o, near_a4(a4_mul(x, y), a4_mul(y, x), 1e-9 * scale), "commutativity");
    expect(o, near_a4(a4_mul(a4_mul(x, y), z), a4_mul(x, a4_mul(y, z)), 1e-9 * scale),
           "associativity");
    expect(o, near_a4(a4_mul(x, a4_unit()), x, 1e-9), "unit law");
  }

  int done = 0;
  while (done < 10000 && o.pass) {
    const A4 x = rand_a4();
    const double m = std::max(1.0, a4_max_abs(x) * a4_max_abs(x));
    // Keep both block determinants clearly away from zero so the float
    // round-trip error stays below the check tolerance.
    if (std::fabs(x.x1 * x.x1 - x.x4 * x.x4) <= 1e-6 * m ||
        std::fabs(x.x2 * x.x2 - x.x3 * x.x3) <= 1e-6 * m)
      continue;
    expect(o, near_a4(a4_mul(x, a4_inverse(x)), a4_unit(), 1e-9), "inverse round trip");
    ++done;
  }
  return o;
}

// 7. Multiplicativity of the embedding with a sign-definite factor, and the
// closed form of the bullet product for doubly zero-straddling classes.
Outcome check_embedding_product() {
  Outcome o;
  for (int i = 0; i < 10000 && o.pass; ++i) {
    GInterval sd = random_proper(5.0);
    const double shift = uniform(0.05, 5.0);
    if (i % 2 == 0)
      sd = GInterval{shift, shift + std::fabs(sd.sup - sd.inf)};
    else
      sd = GInterval{-shift - std::fabs(sd.sup - sd.inf), -shift};
    const GInterval other = random_proper(5.0);

    const A4 lhs = phi(classical_mul({sd.inf, sd.sup}, {other.inf, other.sup}));
    const A4 rhs = a4_mul(phi({sd.inf, sd.sup}), phi({other.inf, other.sup}));
    const double scale = std::max(1.0, a4_max_abs(lhs));
    expect(o,
           near(lhs.x1, rhs.x1, 1e-9 * scale) && near(lhs.x2, rhs.x2, 1e-9 * scale) &&
               near(lhs.x3, rhs.x3, 1e-9 * scale) && near(lhs.x4, rhs.x4, 1e-9 * scale),
           "embedding must respect sign-definite products");
  }

  for (int i = 0; i < 10000 && o.pass; ++i) {
    const GInterval x = random_straddling();
    const GInterval y = random_straddling();
    const double x1 = -x.inf, x2 = x.sup;
    const double y1 = -y.inf, y2 = y.sup;
    const GInterval got = bullet(x, y);
    expect(o, got.inf == -(x1 * y2 + x2 * y1) && got.sup == x2 * y2 + x1 * y1,
           "closed form of the zero-straddling product");
    const Interval cl = classical_mul({x.inf, x.sup}, {y.inf, y.sup});
    expect(o, got.inf <= cl.lo && cl.hi <= got.sup, "must contain the endpoint product");
  }
  return o;
}

// 8. Monotony of the bullet product under containment, in both the class
// form and the ordered-algebra form where shapes are comparable.
Outcome check_monotony() {
  Outcome o;
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const GInterval y = random_proper();
    const GInterval yp = random_proper();
    const double a = uniform(0, 1), b = uniform(0, 1);
    const GInterval x{y.inf + a * 0.5 * (y.sup - y.inf), y.sup - a * 0.4 * (y.sup - y.inf)};
    const GInterval xp{yp.inf + b * 0.5 * (yp.sup - yp.inf),
                       yp.sup - b * 0.4 * (yp.sup - yp.inf)};

    if (!contains(bullet(y, yp), bullet(x, xp), 1e-9)) ++violations;

    const auto cmp = a4_leq(phi_bar(x), phi_bar(y), 1e-9);
    if (cmp.has_value() && !*cmp) ++violations;

    const auto pcmp =
        a4_leq(a4_mul(phi_bar(x), phi_bar(xp)), a4_mul(phi_bar(y), phi_bar(yp)), 1e-9);
    if (pcmp.has_value() && !*pcmp) ++violations;
  }
  expect(o, violations == 0,
         "monotony violated " + std::to_string(violations) + " times");
  return o;
}

// 9. The eps-neighborhood parallelogram agrees with the metric ball around
// ([1,2],0), up to a thin boundary band.
Outcome check_neighborhood() {
  Outcome o;
  const GInterval x0{1, 2};
  const double eps = 0.5;
  const Parallelogram p = neighborhood_vertices(x0, eps);

  const auto inside_closed = [&p](double u, double v) {
    for (int i = 0; i < 4; ++i) {
      const auto& a = p.vertex[i];
      const auto& b = p.vertex[(i + 1) % 4];
      const double cross = (b[0] - a[0]) * (v - a[1]) - (b[1] - a[1]) * (u - a[0]);
      if (cross < 0.0) return false;
    }
    return true;
  };

  int band = 0;
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const double u = uniform(x0.inf - 1.5 * eps, x0.inf + 1.5 * eps);
    const double v = uniform(x0.sup - 1.5 * eps, x0.sup + 1.5 * eps);
    const GInterval s{u, v};
    const double d = distance(x0, s);
    if (std::fabs(d - eps) <= 1e-9) {
      ++band;  // boundary band: both answers acceptable
      continue;
    }
    expect(o, ball_contains(x0, eps, s) == inside_closed(u, v),
           "ball and parallelogram disagree at distance " + std::to_string(d));
  }
  expect(o, band < 100, "boundary band hit unexpectedly often");
  return o;
}

// 10. Continuity probe of the square map at three base points.
Outcome check_continuity() {
  Outcome o;
  const ClassMap sq = [](const GInterval& g) { return q2(g); };
  for (const GInterval& x0 : {GInterval{1, 2}, GInterval{-2, 3}, GInterval{-3, -1}}) {
    for (const double eps : {0.5, 0.1}) {
      const auto eta = continuity_probe(sq, x0, eps);
      expect(o, eta.has_value(),
             "probe found no radius at [" + format_double(x0.inf) + "," +
                 format_double(x0.sup) + "], eps " + format_double(eps));
    }
  }
  const auto eta = continuity_probe(sq, GInterval{1, 2}, 0.5);
  expect(o, eta.has_value() && *eta >= 0.0625 - 1e-15, "radius must reach 1/16");
  return o;
}

// 11. Differentiability probe of the square map at ([1,2],0) against the
// linear candidate D -> 2 * (x0 bullet D): ratios vanish along the widening
// cone but stay above the pinned threshold 2.0 over the full sphere.  The
// threshold was fixed by an independent dense direction sweep beforehand.
Outcome check_differentiability() {
  Outcome o;
  const GInterval x0{1, 2};
  const ClassMap sq = [](const GInterval& g) { return q2(g); };
  const ClassMap lin = differential_candidate(x0);
  const std::vector<double> radii = default_radii(1e-2, 5, 0.1);

  const ProbeReport widening =
      diff_probe(sq, x0, lin, radii, unit_directions(16, DirectionCone::Widening));
  for (std::size_t i = 1; i < widening.rows.size(); ++i)
    expect(o, widening.rows[i].worst_ratio < widening.rows[i - 1].worst_ratio,
           "widening ratios must decrease");
  expect(o, widening.rows.back().worst_ratio < 1e-5, "widening ratios must vanish");

  const ProbeReport all =
      diff_probe(sq, x0, lin, radii, unit_directions(64, DirectionCone::All));
  for (const ProbeRow& row : all.rows)
    expect(o, row.worst_ratio > 2.0,
           "worst ratio " + format_double(row.worst_ratio) + " at radius " +
               format_double(row.radius) + " not above threshold");
  return o;
}

// Dense solver for the vertex-enumeration oracle.
bool solve_square(std::vector<std::vector<double>> m, std::vector<double>& rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (std::fabs(m[piv][c]) < 1e-9) return false;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) rhs[c] /= m[c][c];
  return true;
}

// Brute-force optimum of maximize c.x st A x <= b, x >= 0 by enumerating all
// choices of active constraints.
double vertex_oracle(const std::vector<std::vector<double>>& A,
                     const std::vector<double>& b, const std::vector<double>& c) {
  const int n = static_cast<int>(c.size());
  const int p = static_cast<int>(A.size());
  const int total = p + n;
  double best = 0.0;  // the origin is always feasible here
  for (int mask = 0; mask < (1 << total); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
    std::vector<std::vector<double>> m;
    std::vector<double> rhs;
    for (int i = 0; i < total; ++i) {
      if (!(mask & (1 << i))) continue;
      if (i < p) {
        m.push_back(A[static_cast<std::size_t>(i)]);
        rhs.push_back(b[static_cast<std::size_t>(i)]);
      } else {
        std::vector<double> row(static_cast<std::size_t>(n), 0.0);
        row[static_cast<std::size_t>(i - p)] = 1.0;
        m.push_back(row);
        rhs.push_back(0.0);
      }
    }
    if (!solve_square(m, rhs)) continue;
    bool feasible = true;
    for (int j = 0; j < n && feasible; ++j)
      if (rhs[static_cast<std::size_t>(j)] < -1e-9) feasible = false;
    for (int i = 0; i < p && feasible; ++i) {
      double dot = 0.0;
      for (int j = 0; j < n; ++j)
        dot += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               rhs[static_cast<std::size_t>(j)];
      if (dot > b[static_cast<std::size_t>(i)] + 1e-7) feasible = false;
    }
    if (!feasible) continue;
    double val = 0.0;
    for (int j = 0; j < n; ++j) val += c[static_cast<std::size_t>(j)] * rhs[static_cast<std::size_t>(j)];
    if (val > best) best = val;
  }
  return best;
}

// Replays the solver's pivots, asserting non-negative right-hand sides after
// every step, and returns the final tableau.
Tableau replay(const IntervalLP& lp, const LPSolution& sol, Outcome& o) {
  Tableau t = standardize(lp);
  for (const auto& step : sol.trace) {
    apply_pivot(t, step[0], step[1]);
    for (const GInterval& rhs : t.rhs) {
      expect(o, is_proper(rhs) && rhs.inf >= -1e-9,
             "right-hand side went negative after a pivot");
    }
  }
  return t;
}

// 12. Interval simplex: hand-traced instance, then random point instances
// against the vertex-enumeration oracle.
Outcome check_simplex() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();

  IntervalLP hand;
  hand.A = {{1, 1}, {1, 0}};
  hand.B = {{4, 6}, {2, 3}};
  hand.c = {3, 2};
  const LPSolution hs = solve(hand);
  expect(o, hs.status == LPStatus::Optimal, "hand instance must be optimal");
  expect(o,
         hs.trace.size() == 2 && hs.trace[0][0] == 1 && hs.trace[0][1] == 0 &&
             hs.trace[1][0] == 0 && hs.trace[1][1] == 1,
         "hand instance pivot trace");
  expect(o, near(hs.assignment[0], GInterval{2, 3}, 1e-12), "hand instance x1");
  expect(o, near(hs.assignment[1], GInterval{2, 3}, 1e-12), "hand instance x2");
  expect(o, near(hs.objective_value, GInterval{10, 15}, 1e-12), "hand instance objective");
  replay(hand, hs, o);

  for (int inst = 0; inst < 50 && o.pass; ++inst) {
    const int n = 1 + randint(3);
    const int p = 1 + randint(3);
    IntervalLP lp;
    lp.A.assign(static_cast<std::size_t>(p), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (auto& row : lp.A)
      for (double& v : row) v = uniform(0.0, 2.0);
    // Give every column a solidly positive entry so the region is bounded.
    for (int j = 0; j < n; ++j)
      lp.A[static_cast<std::size_t>(randint(p))][static_cast<std::size_t>(j)] += 0.5;
    std::vector<double> b;
    for (int r = 0; r < p; ++r) {
      b.push_back(uniform(0.5, 4.0));
      lp.B.push_back({b.back(), b.back()});
    }
    lp.c.assign(static_cast<std::size_t>(n), 0.0);
    for (double& v : lp.c) v = uniform(-1.0, 2.0);

    const LPSolution sol = solve(lp);
    expect(o, sol.status == LPStatus::Optimal, "random instance must be optimal");
    if (!o.pass) break;

    // Feasibility of the reported point and absence of improving columns.
    for (int r = 0; r < p; ++r) {
      double dot = 0.0;
      for (int j = 0; j < n; ++j)
        dot += lp.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
               sol.assignment[static_cast<std::size_t>(j)].inf;
      expect(o, dot <= b[static_cast<std::size_t>(r)] + 1e-7, "assignment must be feasible");
    }
    for (int j = 0; j < n; ++j)
      expect(o, sol.assignment[static_cast<std::size_t>(j)].inf >= -1e-9,
             "assignment must be non-negative");

    const Tableau final_t = replay(lp, sol, o);
    for (double rc : final_t.obj)
      expect(o, rc <= 1e-9, "reduced cost must not stay positive");

    const double oracle = vertex_oracle(lp.A, b, lp.c);
    expect(o, near(sol.objective_value.inf, oracle, 1e-7) &&
                  near(sol.objective_value.sup, oracle, 1e-7),
           "objective " + format_double(sol.objective_value.inf) +
               " differs from oracle " + format_double(oracle));
  }

  expect(o, ms_since(t0) < 10000.0, "runtime above 10 s");
  return o;
}

std::string run_cli(const std::string& cli, const std::string& args, Outcome& o) {
  const std::string cmd = "\"" + cli + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    expect(o, false, "cannot run " + cmd);
    return "";
  }
  std::string out;
  char buf[512];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  expect(o, rc == 0, "non-zero exit from " + cmd);
  return out;
}

std::string read_file(const std::string& path, Outcome& o) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    expect(o, false, "cannot read " + path);
    return "";
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 13. CLI invocations reproduce the committed golden outputs byte for byte.
Outcome check_cli_golden(const std::string& cli, const std::string& golden_dir) {
  Outcome o;
  const struct {
    const char* args;
    const char* file;
  } cases[] = {
      {"eval \"[2,4] + dual[6,1]\"", "eval_add_dual.txt"},
      {"euclid [1,3] [1,4]", "euclid_points.txt"},
      {"a4 \"(0,2,4,0)\"", "a4_noninvertible.txt"},
  };
  for (const auto& c : cases) {
    const std::string got = run_cli(cli, c.args, o);
    const std::string want = read_file(golden_dir + "/" + c.file, o);
    expect(o, !want.empty() && got == want,
           std::string("output mismatch for `") + c.args + "`");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  const struct {
    const char* label;
    std::function<Outcome()> run;
  } checks[] = {
      {"embedded sum keeps its key but leaves the image", check_embedding_sum},
      {"exact division by a zero-straddling divisor", check_exact_division},
      {"Euclidean division with point quotient and remainder", check_euclidean_division},
      {"norm axioms and submultiplicativity", check_norm_suite},
      {"vector space compatibility laws", check_vector_space_suite},
      {"algebra laws and inverse round trips", check_algebra_suite},
      {"embedding products and the zero-straddling closed form", check_embedding_product},
      {"monotony under containment", check_monotony},
      {"neighborhood parallelogram matches the metric ball", check_neighborhood},
      {"continuity probe of the square map", check_continuity},
      {"differentiability probe: widening cone versus full sphere", check_differentiability},
      {"interval simplex against the vertex oracle", check_simplex},
      {"command line golden outputs", [&] { return check_cli_golden(cli, golden); }},
  };

  int failures = 0;
  int id = 0;
  for (const auto& c : checks) {
    ++id;
    const Outcome o = c.run();
    char num[8];
    std::snprintf(num, sizeof(num), "%02d", id);
    if (o.pass) {
      std::cout << "[PASS] " << num << " " << c.label << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << num << " " << c.label << " (" << o.detail << ")\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
