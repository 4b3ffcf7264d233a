#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivalg/analysis.hpp"
#include "ivalg/division.hpp"
#include "ivalg/embedding.hpp"
#include "ivalg/lp_json.hpp"
#include "ivalg/text.hpp"

namespace {

using ivalg::GInterval;

nlohmann::json class_json(const GInterval& g) {
  return nlohmann::json{{"inf", g.inf}, {"sup", g.sup}};
}

std::string class_output(const GInterval& g, bool as_json, double tol) {
  if (as_json) return class_json(g).dump() + "\n";
  return ivalg::to_text(g, tol) + "\n";
}

std::string division_output(const ivalg::DivisionResult& r, bool as_json, double tol) {
  if (as_json) {
    nlohmann::json j{{"quotient", class_json(r.quotient)},
                     {"remainder", class_json(r.remainder)},
                     {"exact", r.exact}};
    return j.dump() + "\n";
  }
  std::string out = "quotient " + ivalg::to_text(r.quotient, tol) + "\n";
  out += "remainder " + ivalg::to_text(r.remainder, tol) + "\n";
  out += std::string("exact ") + (r.exact ? "true" : "false") + "\n";
  return out;
}

bool positive_pattern(const GInterval& g, double tol) {
  return ivalg::is_proper(g) && g.inf >= -tol;
}

bool straddles_zero(const GInterval& g, double tol) {
  return g.inf < -tol && g.sup > tol;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator for generalized interval classes"};
  app.require_subcommand(1);

  double tol = ivalg::kTol;
  std::string out_path;
  bool as_json = false;
  app.add_option("--tol", tol, "comparison tolerance")->capture_default_str();
  app.add_option("--out", out_path, "write the output to this file");
  app.add_flag("--json", as_json, "machine-readable output for eval/mul/div/euclid");

  std::string expr;
  auto* cmd_eval = app.add_subcommand(
      "eval", "evaluate an expression over classes ([a,b], dual[p,q], point a, numbers)");
  cmd_eval->add_option("expr", expr, "expression with +, -, * and parentheses")->required();

  std::string mul_lhs, mul_rhs;
  auto* cmd_mul = app.add_subcommand("mul", "endpoint product of two proper classes");
  cmd_mul->add_option("x", mul_lhs, "proper class")->required();
  cmd_mul->add_option("y", mul_rhs, "proper class")->required();

  std::string div_dividend, div_divisor;
  auto* cmd_div = app.add_subcommand("div", "divide, exact when possible");
  cmd_div->add_option("dividend", div_dividend, "class literal")->required();
  cmd_div->add_option("divisor", div_divisor, "class literal")->required();

  std::string euc_dividend, euc_divisor;
  auto* cmd_euclid = app.add_subcommand("euclid", "Euclidean division with remainder");
  cmd_euclid->add_option("dividend", euc_dividend, "class literal")->required();
  cmd_euclid->add_option("divisor", euc_divisor, "class literal")->required();

  std::string a4_text;
  auto* cmd_a4 = app.add_subcommand("a4", "inspect an algebra element (x1,x2,x3,x4)");
  cmd_a4->add_option("element", a4_text, "element literal")->required();

  std::string lp_path;
  auto* cmd_lp = app.add_subcommand("lp", "solve an interval linear program from JSON");
  cmd_lp->add_option("file", lp_path, "problem file")->required();

  std::string probe_target, probe_x0;
  double probe_eps = 0.0;
  auto* cmd_probe = app.add_subcommand(
      "probe", "remainder-ratio probe against the linear candidate 2*(x0 bullet .)");
  cmd_probe->add_option("map", probe_target, "map to probe")
      ->required()
      ->check(CLI::IsMember({"q2"}));
  cmd_probe->add_option("x0", probe_x0, "base point class")->required();
  cmd_probe->add_option("eps", probe_eps, "largest probe radius")->required();

  std::string nb_x0;
  double nb_eps = 0.0;
  auto* cmd_nb = app.add_subcommand("neighborhood", "vertices of an eps-neighborhood");
  cmd_nb->add_option("x0", nb_x0, "positive class with inf >= 0")->required();
  cmd_nb->add_option("eps", nb_eps, "radius")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string output;
  try {
    if (cmd_eval->parsed()) {
      output = class_output(ivalg::eval_expression(expr, tol), as_json, tol);
    } else if (cmd_mul->parsed()) {
      const ivalg::Interval x = ivalg::proper_part(ivalg::parse_class(mul_lhs, tol));
      const ivalg::Interval y = ivalg::proper_part(ivalg::parse_class(mul_rhs, tol));
      output = class_output(ivalg::to_class(ivalg::classical_mul(x, y)), as_json, tol);
    } else if (cmd_div->parsed()) {
      const GInterval y = ivalg::parse_class(div_dividend, tol);
      const GInterval x = ivalg::parse_class(div_divisor, tol);
      output = division_output(ivalg::divide(y, x, tol), as_json, tol);
    } else if (cmd_euclid->parsed()) {
      const GInterval y = ivalg::parse_class(euc_dividend, tol);
      const GInterval x = ivalg::parse_class(euc_divisor, tol);
      ivalg::DivisionResult r;
      if (positive_pattern(x, tol) && positive_pattern(y, tol))
        r = ivalg::euclid_positive(y, x, tol);
      else if (straddles_zero(x, tol) && straddles_zero(y, tol))
        r = ivalg::euclid_zero_containing(y, x, tol);
      else
        throw ivalg::Unsupported("operand sign pattern has no Euclidean rule");
      output = division_output(r, as_json, tol);
    } else if (cmd_a4->parsed()) {
      const ivalg::A4 m = ivalg::parse_a4(a4_text);
      const bool inv = ivalg::a4_is_invertible(m, tol);
      output = std::string("invertible: ") + (inv ? "true" : "false") + "\n";
      if (inv) output += "inverse: " + ivalg::to_text(ivalg::a4_inverse(m, tol)) + "\n";
      const ivalg::A4Key key = ivalg::a4_key(m);
      output += "key: (" + ivalg::format_double(key.u) + "," +
                ivalg::format_double(key.v) + ")\n";
      output += "psi: " + ivalg::to_text(ivalg::psi(m), tol) + "\n";
    } else if (cmd_lp->parsed()) {
      std::ifstream in(lp_path);
      if (!in) throw ivalg::DomainError("cannot read " + lp_path);
      std::stringstream buf;
      buf << in.rdbuf();
      const ivalg::IntervalLP lp = ivalg::lp_from_json_text(buf.str());
      output = ivalg::lp_solution_to_json_text(ivalg::solve(lp, tol));
    } else if (cmd_probe->parsed()) {
      const GInterval x0 = ivalg::parse_class(probe_x0, tol);
      if (!(probe_eps > 0.0)) throw ivalg::DomainError("eps must be positive");
      const auto report = ivalg::diff_probe(
          [](const GInterval& g) { return ivalg::q2(g); }, x0,
          ivalg::differential_candidate(x0), ivalg::default_radii(probe_eps, 5, 0.1),
          ivalg::unit_directions(64, ivalg::DirectionCone::All));
      output = ivalg::to_csv(report);
    } else if (cmd_nb->parsed()) {
      const GInterval x0 = ivalg::parse_class(nb_x0, tol);
      const ivalg::Parallelogram p = ivalg::neighborhood_vertices(x0, nb_eps);
      output = "x,y\n";
      for (const auto& v : p.vertex)
        output += ivalg::format_double(v[0]) + "," + ivalg::format_double(v[1]) + "\n";
    }
  } catch (const ivalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << output;
  }
  return 0;
}
