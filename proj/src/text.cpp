#include "ivalg/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <variant>

#include "ivalg/embedding.hpp"

namespace ivalg {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_text(const GInterval& a, double tol) {
  if (std::fabs(a.inf - a.sup) <= tol) return "point " + format_double(a.inf);
  if (a.inf < a.sup)
    return "[" + format_double(a.inf) + "," + format_double(a.sup) + "]";
  return "dual[" + format_double(-a.sup) + "," + format_double(-a.inf) + "]";
}

std::string to_text(const A4& m) {
  return "(" + format_double(m.x1) + "," + format_double(m.x2) + "," +
         format_double(m.x3) + "," + format_double(m.x4) + ")";
}

namespace {

// Shared scanner for the literal parsers and the expression evaluator.
struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(std::string("expected '") + c + "' in \"" + std::string(s) + "\"");
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) != w) return false;
    const std::size_t after = pos + w.size();
    if (after < s.size() && (std::isalnum(static_cast<unsigned char>(s[after])) ||
                             s[after] == '_'))
      return false;
    pos = after;
    return true;
  }
  double number() {
    skip_ws();
    const std::string tail(s.substr(pos));
    const char* begin = tail.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected a number in \"" + std::string(s) + "\"");
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }
};

GInterval bracket_literal(Scanner& sc) {
  sc.expect('[');
  const double lo = sc.number();
  sc.expect(',');
  const double hi = sc.number();
  sc.expect(']');
  if (lo > hi)
    throw ParseError("endpoints out of order; use dual[hi,lo] for improper classes");
  return {lo, hi};
}

GInterval literal(Scanner& sc, double tol) {
  if (sc.consume_word("dual")) {
    sc.expect('[');
    const double p = sc.number();
    sc.expect(',');
    const double q = sc.number();
    sc.expect(']');
    if (q > p) throw ParseError("dual[p,q] expects p >= q");
    return neg(GInterval{q, p});
  }
  if (sc.consume_word("point")) {
    const double v = sc.number();
    return {v, v};
  }
  if (sc.peek() == '[') return bracket_literal(sc);
  (void)tol;
  throw ParseError("expected a class literal in \"" + std::string(sc.s) + "\"");
}

// Expression values are either plain numbers or classes; '*' scales when a
// plain number is involved and is the bullet product between two classes.
using Value = std::variant<double, GInterval>;

GInterval as_class(const Value& v) {
  if (std::holds_alternative<double>(v)) {
    const double d = std::get<double>(v);
    return {d, d};
  }
  return std::get<GInterval>(v);
}

Value parse_expr(Scanner& sc, double tol);

Value parse_primary(Scanner& sc, double tol) {
  if (sc.consume('(')) {
    Value v = parse_expr(sc, tol);
    sc.expect(')');
    return v;
  }
  const char c = sc.peek();
  if (c == '[' || c == 'd' || c == 'p') return literal(sc, tol);
  return sc.number();
}

Value parse_factor(Scanner& sc, double tol) {
  if (sc.consume('-')) {
    const Value v = parse_factor(sc, tol);
    if (std::holds_alternative<double>(v)) return -std::get<double>(v);
    return neg(std::get<GInterval>(v));
  }
  return parse_primary(sc, tol);
}

Value parse_term(Scanner& sc, double tol) {
  Value acc = parse_factor(sc, tol);
  while (sc.consume('*')) {
    const Value rhs = parse_factor(sc, tol);
    if (std::holds_alternative<double>(acc) && std::holds_alternative<double>(rhs)) {
      acc = std::get<double>(acc) * std::get<double>(rhs);
    } else if (std::holds_alternative<double>(acc)) {
      acc = scalar_mul(std::get<double>(acc), std::get<GInterval>(rhs));
    } else if (std::holds_alternative<double>(rhs)) {
      acc = scalar_mul(std::get<double>(rhs), std::get<GInterval>(acc));
    } else {
      acc = bullet(std::get<GInterval>(acc), std::get<GInterval>(rhs));
    }
  }
  return acc;
}

Value parse_expr(Scanner& sc, double tol) {
  Value acc = parse_term(sc, tol);
  for (;;) {
    if (sc.consume('+')) {
      const Value rhs = parse_term(sc, tol);
      acc = add(as_class(acc), as_class(rhs));
    } else if (sc.consume('-')) {
      const Value rhs = parse_term(sc, tol);
      acc = sub(as_class(acc), as_class(rhs));
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

GInterval parse_class(std::string_view s, double tol) {
  Scanner sc{s};
  GInterval g;
  if (sc.peek() == '[' || sc.peek() == 'd' || sc.peek() == 'p') {
    g = literal(sc, tol);
  } else {
    const double v = sc.number();
    g = {v, v};
  }
  if (!sc.at_end()) throw ParseError("trailing input after class literal");
  return g;
}

A4 parse_a4(std::string_view s) {
  Scanner sc{s};
  sc.expect('(');
  A4 m;
  m.x1 = sc.number();
  sc.expect(',');
  m.x2 = sc.number();
  sc.expect(',');
  m.x3 = sc.number();
  sc.expect(',');
  m.x4 = sc.number();
  sc.expect(')');
  if (!sc.at_end()) throw ParseError("trailing input after algebra element");
  return m;
}

GInterval eval_expression(std::string_view s, double tol) {
  Scanner sc{s};
  const Value v = parse_expr(sc, tol);
  if (!sc.at_end()) throw ParseError("trailing input after expression");
  return as_class(v);
}

}  // namespace ivalg
