#include "ivalg/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace ivalg {

Interval classical_mul(Interval x, Interval y) {
  const double p1 = x.lo * y.lo;
  const double p2 = x.lo * y.hi;
  const double p3 = x.hi * y.lo;
  const double p4 = x.hi * y.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

A4 phi(Interval x) {
  if (x.lo > x.hi) throw ImproperEndpoints("phi expects a proper interval");
  if (x.lo >= 0.0) return {x.lo, x.hi, 0.0, 0.0};
  if (x.hi >= 0.0) return {0.0, x.hi, -x.lo, 0.0};
  return {0.0, 0.0, -x.lo, -x.hi};
}

A4 phi_bar(const GInterval& a) {
  if (is_proper(a)) return phi({a.inf, a.sup});
  return a4_neg(phi({-a.inf, -a.sup}));
}

A4Key a4_key(const A4& m) { return {m.x1 - m.x3, m.x2 - m.x4}; }

bool r_equivalent(const A4& m, const A4& n, double tol) {
  const A4Key km = a4_key(m);
  const A4Key kn = a4_key(n);
  return std::fabs(km.u - kn.u) <= tol && std::fabs(km.v - kn.v) <= tol;
}

GInterval psi(const A4& m) { return {m.x1 - m.x3, m.x2 - m.x4}; }

bool in_phi_bar_image(const A4& m, double tol) {
  const bool p_zero = std::fabs(m.x3) <= tol && std::fabs(m.x4) <= tol;
  const bool m_zero = std::fabs(m.x1) <= tol && std::fabs(m.x4) <= tol;
  const bool n_zero = std::fabs(m.x1) <= tol && std::fabs(m.x2) <= tol;
  if (p_zero &&
      ((m.x1 >= -tol && m.x2 >= m.x1 - tol) || (m.x1 <= tol && m.x2 <= m.x1 + tol)))
    return true;
  if (m_zero && ((m.x2 >= -tol && m.x3 >= -tol) || (m.x2 <= tol && m.x3 <= tol)))
    return true;
  if (n_zero &&
      ((m.x3 >= m.x4 - tol && m.x4 >= -tol) || (m.x3 <= m.x4 + tol && m.x4 <= tol)))
    return true;
  return false;
}

GInterval bullet(const GInterval& a, const GInterval& b) {
  return psi(a4_mul(phi_bar(a), phi_bar(b)));
}

bool contains(const GInterval& outer, const GInterval& inner, double tol) {
  if (!is_proper(outer)) throw DomainError("containment: outer class is improper");
  if (!is_proper(inner)) throw DomainError("containment: inner class is improper");
  return outer.inf <= inner.inf + tol && inner.sup <= outer.sup + tol;
}

}  // namespace ivalg
