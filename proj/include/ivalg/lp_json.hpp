#pragma once

#include <string>

#include "ivalg/linprog.hpp"

// JSON wire format for the lp subcommand.
//
// Input:
//   {"maximize": [3, 2],
//    "constraints": [
//      {"coeffs": [1, 1], "sense": "<=", "rhs": {"inf": 4, "sup": 6}},
//      {"coeffs": [1, 0], "sense": "<=", "rhs": {"inf": 2, "sup": 3}}],
//    "max_iter": 100}
// "sense" is "<=" or "="; "max_iter" is optional.
//
// Output:
//   {"status": "optimal" | "unbounded" | "iteration_limit",
//    "assignment": [{"inf": ..., "sup": ...}, ...],   // one per variable
//    "objective": {"inf": ..., "sup": ...},
//    "trace": [[row, col], ...]}

namespace ivalg {

IntervalLP lp_from_json_text(const std::string& text);  // throws ParseError

std::string lp_solution_to_json_text(const LPSolution& s);

}  // namespace ivalg
