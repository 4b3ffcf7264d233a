#include "ivalg/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ivalg/embedding.hpp"
#include "ivalg/text.hpp"

namespace ivalg {

GInterval q2(const GInterval& a) {
  const GInterval k = is_improper(a) ? neg(a) : a;
  const double lo = k.inf, hi = k.sup;
  if (lo >= 0.0) return {lo * lo, hi * hi};
  if (hi <= 0.0) return {hi * hi, lo * lo};
  return {0.0, std::max(lo * lo, hi * hi)};
}

GInterval poly_eval(const std::vector<double>& coeffs, const GInterval& x) {
  if (coeffs.empty()) return {0.0, 0.0};
  GInterval acc = scalar_mul(coeffs[0], GInterval{1.0, 1.0});
  GInterval pw = x;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (i > 1) pw = bullet(pw, x);
    acc = add(acc, scalar_mul(coeffs[i], pw));
  }
  return acc;
}

std::vector<GInterval> unit_directions(int count, DirectionCone cone) {
  std::vector<GInterval> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  switch (cone) {
    case DirectionCone::All: {
      // Boundary of the unit ball, a parallelogram through these vertices.
      static const double kVert[4][2] = {
          {1.0, 1.0}, {0.5, -0.5}, {-1.0, -1.0}, {-0.5, 0.5}};
      const int per = std::max(1, count / 4);
      for (int e = 0; e < 4 && static_cast<int>(out.size()) < count; ++e) {
        for (int k = 0; k < per && static_cast<int>(out.size()) < count; ++k) {
          const double t = static_cast<double>(k) / per;
          const double* a = kVert[e];
          const double* b = kVert[(e + 1) % 4];
          out.push_back({(1.0 - t) * a[0] + t * b[0], (1.0 - t) * a[1] + t * b[1]});
        }
      }
      break;
    }
    case DirectionCone::Widening: {
      // d = (s, 1) for s in (0,1), scaled to unit norm (3 - s) / 2.
      for (int k = 1; k <= count; ++k) {
        const double s = static_cast<double>(k) / (count + 1);
        const double n = (3.0 - s) / 2.0;
        out.push_back({s / n, 1.0 / n});
      }
      break;
    }
    case DirectionCone::LowerDominant: {
      // d = (-1, s) for s in (0,1), scaled to unit norm (3 + s) / 2.
      for (int k = 1; k <= count; ++k) {
        const double s = static_cast<double>(k) / (count + 1);
        const double n = (3.0 + s) / 2.0;
        out.push_back({-1.0 / n, s / n});
      }
      break;
    }
  }
  return out;
}

std::optional<double> continuity_probe(const ClassMap& f,
                                       const GInterval& x0,
                                       double eps,
                                       const ProbeGrid& grid) {
  if (!(eps > 0.0)) throw DomainError("continuity probe needs eps > 0");
  const std::vector<GInterval> dirs = unit_directions(grid.directions, DirectionCone::All);
  const GInterval fx0 = f(x0);
  double eta = eps;
  for (int step = 0; step < grid.ladder_steps; ++step, eta /= 2.0) {
    bool ok = true;
    for (const GInterval& d : dirs) {
      for (int j = 1; j <= grid.radial_steps && ok; ++j) {
        const double r =
            eta * (static_cast<double>(j) / grid.radial_steps) * (1.0 - 1e-12);
        const GInterval x = add(x0, scalar_mul(r, d));
        if (!(distance(f(x), fx0) < eps)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return eta;
  }
  return std::nullopt;
}

ClassMap differential_candidate(const GInterval& x0) {
  return [x0](const GInterval& d) { return scalar_mul(2.0, bullet(x0, d)); };
}

ProbeReport diff_probe(const ClassMap& f,
                       const GInterval& x0,
                       const ClassMap& L,
                       const std::vector<double>& radii,
                       const std::vector<GInterval>& directions) {
  ProbeReport report;
  report.rows.reserve(radii.size());
  const GInterval fx0 = f(x0);
  for (double t : radii) {
    if (!(t > 0.0)) throw DomainError("probe radii must be positive");
    ProbeRow row;
    row.radius = t;
    row.worst_ratio = -1.0;
    for (const GInterval& d : directions) {
      const GInterval delta = scalar_mul(t, d);
      const GInterval x = add(x0, delta);
      const GInterval resid = sub(sub(f(x), fx0), L(delta));
      const double ratio = norm(resid) / norm(delta);
      if (ratio > row.worst_ratio) {
        row.worst_ratio = ratio;
        row.witness = x;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

std::vector<double> default_radii(double first, int count, double step) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(0, count)));
  double r = first;
  for (int i = 0; i < count; ++i, r *= step) out.push_back(r);
  return out;
}

std::string to_csv(const ProbeReport& report) {
  std::string out = "radius,worst_ratio,witness_inf,witness_sup\n";
  for (const ProbeRow& row : report.rows) {
    out += format_double(row.radius);
    out += ',';
    out += format_double(row.worst_ratio);
    out += ',';
    out += format_double(row.witness.inf);
    out += ',';
    out += format_double(row.witness.sup);
    out += '\n';
  }
  return out;
}

}  // namespace ivalg
