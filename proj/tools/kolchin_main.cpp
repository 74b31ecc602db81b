// Batch front end: every subcommand reads JSON (or the plain-text matrix
// format), computes one report and prints it to stdout. Exit codes:
//   0  success
//   1  structured error (parse failure, precondition violation)
//   2  a verification subcommand found a mismatch

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kolchin/bounds.hpp"
#include "kolchin/errors.hpp"
#include "kolchin/json_io.hpp"

namespace {

using namespace kolchin;

struct Options {
  std::string input;
  std::string format = "json";
  std::int64_t verify_upto = -1;
  int codim = -1;
  std::string orders;
  bool general = false;
  bool trace = false;
  std::int64_t k = 1;
};

std::string read_input(const std::string& source) {
  if (source.empty()) throw InvalidInput("an --input is required");
  if (source.front() == '{') return source;  // inline JSON
  std::ifstream in(source);
  if (!in) throw InvalidInput("cannot open input file: " + source);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw InvalidInput(std::string("JSON parse error: ") + err.what());
  }
}

ExponentMatrix read_matrix(const std::string& source) {
  const std::string text = read_input(source);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return matrix_from_json(parse_json(text));
    break;
  }
  return matrix_from_text(text);
}

void emit(const Json& report, const Options& opt, const std::string& text_form) {
  if (opt.format == "text")
    std::cout << text_form << "\n";
  else
    std::cout << report.dump(2) << "\n";
}

std::string polynomial_text(const NumericalPolynomial& p) {
  return to_binomial_string(p) + "  =  " + to_expanded_string(p);
}

int run_dimpoly(const Options& opt) {
  const ExponentMatrix e = read_matrix(opt.input);
  const DimPolyResult r = dimension_polynomial(e);
  Json report = to_json(r);
  bool verified = true;
  if (opt.verify_upto >= 0) {
    for (std::int64_t s = r.stability_bound; s <= opt.verify_upto; ++s)
      if (r.polynomial(s) != brute_count(e, s)) verified = false;
    report["verified_upto"] = opt.verify_upto;
    report["verified"] = verified;
  }
  std::ostringstream text;
  text << "dimension polynomial: " << polynomial_text(r.polynomial)
       << "\nstability bound: " << r.stability_bound;
  if (opt.verify_upto >= 0)
    text << "\nverified against counting up to s=" << opt.verify_upto << ": "
         << (verified ? "yes" : "NO");
  emit(report, opt, text.str());
  return verified ? 0 : 2;
}

int run_mincoeffs(const Options& opt, bool witness_only) {
  const NumericalPolynomial p = polynomial_from_json(parse_json(read_input(opt.input)));
  const WDecision d = is_in_w(p);
  std::ostringstream text;
  if (!witness_only) {
    text << "minimizing coefficients: [";
    for (std::size_t i = 0; i < d.coefficients.b.size(); ++i)
      text << (i ? ", " : "") << to_decimal(d.coefficients.b[i]);
    text << "]\n";
  }
  text << "in W: " << (d.in_w ? "yes" : "no");
  if (!d.in_w)
    text << " (b_" << d.witness_index << " = " << to_decimal(d.witness_value) << ")";
  emit(to_json(d), opt, text.str());
  return 0;
}

int run_charpoly(const Options& opt) {
  const GradedSystem sys = system_from_json(parse_json(read_input(opt.input)));
  const NumericalPolynomial p = charpoly(sys);
  const Invariants inv = invariants_of(p, sys.m);
  Json report{{"polynomial", to_json(p)},
              {"invariants", to_json(inv)},
              {"rendering", Json{{"binomial", to_binomial_string(p)},
                                 {"expanded", to_expanded_string(p)}}}};
  std::ostringstream text;
  text << "characteristic polynomial: " << polynomial_text(p);
  if (inv.null_module)
    text << "\nnull module";
  else
    text << "\ntype: " << inv.type << "  codim: " << inv.codim
         << "  typical dimension: " << to_decimal(inv.typical_dimension);
  emit(report, opt, text.str());
  return 0;
}

int run_bound(const Options& opt) {
  if (opt.codim < 0) throw InvalidInput("--codim is required");
  std::vector<Int> orders;
  std::stringstream in(opt.orders);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) {
      try {
        orders.emplace_back(item);
      } catch (const std::invalid_argument&) {
        throw InvalidInput("--orders entries must be decimal integers");
      }
    }
  BoundReport r;
  if (opt.general) {
    if (orders.size() != 1) throw InvalidInput("--general takes exactly one order");
    r = bound_general(opt.codim, orders[0]);
  } else {
    r = bound_closed(opt.codim, orders);
  }
  Json report = to_json(r);
  if (!opt.trace) report.erase("derivation");
  std::ostringstream text;
  text << "codim " << r.codim << " bound: " << to_decimal(r.bound);
  for (const auto& flag : r.discrepancy_flags) text << "\nflag: " << flag;
  emit(report, opt, text.str());
  return 0;
}

int run_jacobi(const Options& opt) {
  const auto matrix = jacobi_matrix_from_json(parse_json(read_input(opt.input)));
  const auto value = jacobi_number(matrix);
  Json report{{"jacobi", value ? Json(*value) : Json(nullptr)}};
  emit(report, opt,
       std::string("jacobi number: ") + (value ? std::to_string(*value) : "undefined"));
  return 0;
}

int run_verify(const Options& opt) {
  const GradedSystem sys = system_from_json(parse_json(read_input(opt.input)));
  const BoundVerdict v = check_bound_against_system(sys);
  Json report = to_json(v);
  if (!opt.trace && report.contains("bound_report"))
    report["bound_report"].erase("derivation");
  std::ostringstream text;
  if (v.invariants.null_module) {
    text << "null module; nothing to bound";
  } else {
    text << "codim " << v.invariants.codim << ": typical dimension "
         << to_decimal(v.invariants.typical_dimension) << " vs bound "
         << to_decimal(v.report->bound) << " -> " << (v.holds ? "holds" : "VIOLATED");
  }
  emit(report, opt, text.str());
  return v.holds ? 0 : 2;
}

int run_example_ex(const Options& opt) {
  const GradedSystem sys = codim3_witness_system(opt.k);
  const NumericalPolynomial p = charpoly(sys);
  const Int expected = Int(opt.k) * opt.k * (opt.k + 1) * (opt.k + 1) / 2;
  const bool constant = p.degree() <= 0;
  const bool match = constant && p.coeff(0) == expected;
  Json report{{"charpoly", constant ? int_to_json(p.coeff(0)) : to_json(p)},
              {"expected", int_to_json(expected)},
              {"match", match}};
  std::ostringstream text;
  text << "k=" << opt.k << ": characteristic polynomial " << polynomial_text(p)
       << ", expected constant " << to_decimal(expected) << " -> "
       << (match ? "match" : "MISMATCH");
  emit(report, opt, text.str());
  return match ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kolchin dimension polynomials, characteristic polynomials and "
               "typical-dimension bounds for graded systems"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("--input,-i", opt.input, "input file path or inline JSON");
    cmd->add_option("--format", opt.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* dimpoly =
      app.add_subcommand("dimpoly", "dimension polynomial of an exponent matrix");
  add_common(dimpoly, true);
  dimpoly->add_option("--verify-upto", opt.verify_upto,
                      "check the polynomial against exhaustive counting up to s");

  CLI::App* mincoeffs =
      app.add_subcommand("mincoeffs", "minimizing coefficients of a polynomial");
  add_common(mincoeffs, true);

  CLI::App* inw = app.add_subcommand("in-w", "decide membership in W");
  add_common(inw, true);

  CLI::App* cp =
      app.add_subcommand("charpoly", "characteristic polynomial of a graded system");
  add_common(cp, true);

  CLI::App* bound = app.add_subcommand("bound", "typical-dimension bound");
  add_common(bound, false);
  bound->add_option("--codim", opt.codim, "codimension")->required();
  bound->add_option("--orders", opt.orders, "comma-separated generator orders")
      ->required();
  bound->add_flag("--general", opt.general, "use the symbolic derivation");
  bound->add_flag("--trace", opt.trace, "include the derivation trace");

  CLI::App* jacobi = app.add_subcommand("jacobi", "Jacobi number of an order matrix");
  add_common(jacobi, true);

  CLI::App* verify =
      app.add_subcommand("verify", "check the applicable bound against a system");
  add_common(verify, true);
  verify->add_flag("--trace", opt.trace, "include the derivation trace");

  CLI::App* example =
      app.add_subcommand("example-ex", "codim-3 tightness witness family");
  add_common(example, false);
  example->add_option("--k", opt.k, "family parameter k >= 1")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (dimpoly->parsed()) return run_dimpoly(opt);
    if (mincoeffs->parsed()) return run_mincoeffs(opt, false);
    if (inw->parsed()) return run_mincoeffs(opt, true);
    if (cp->parsed()) return run_charpoly(opt);
    if (bound->parsed()) return run_bound(opt);
    if (jacobi->parsed()) return run_jacobi(opt);
    if (verify->parsed()) return run_verify(opt);
    if (example->parsed()) return run_example_ex(opt);
  } catch (const Error& err) {
    std::cout << Json{{"error", Json{{"code", err.code()}, {"message", err.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cout << Json{{"error",
                       Json{{"code", "InternalError"}, {"message", err.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  }
  return 0;
}
