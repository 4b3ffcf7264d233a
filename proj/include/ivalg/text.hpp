#pragma once

#include <string>
#include <string_view>

#include "ivalg/algebra4.hpp"
#include "ivalg/interval.hpp"

// Text form of classes and algebra elements.
//
//   [a,b]      proper class, a < b
//   point a    scalar class
//   dual[p,q]  improper class: the negative of the proper class [q,p],
//              i.e. GInterval(-q, -p); always printed with p > q
//
// Numbers print in shortest round-trip decimal form with '.' as separator.

namespace ivalg {

std::string format_double(double v);

std::string to_text(const GInterval& a, double tol = kTol);
std::string to_text(const A4& m);

// Whole-string literal parsers; throw ParseError on anything else.
GInterval parse_class(std::string_view s, double tol = kTol);
A4 parse_a4(std::string_view s);  // "(x1,x2,x3,x4)"

// Expression evaluator over class literals and plain numbers with +, -
// (binary and unary), * and parentheses.  '*' is vector-space scaling when
// either side is a plain number and the bullet product when both sides are
// classes ('point a' forces a class).  '+' and '-' promote plain numbers to
// point classes.  The result is returned as a class.
GInterval eval_expression(std::string_view s, double tol = kTol);

}  // namespace ivalg
