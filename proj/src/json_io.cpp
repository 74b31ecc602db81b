#include "kolchin/json_io.hpp"

#include <sstream>

#include "kolchin/errors.hpp"

namespace kolchin {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::int64_t small_int_from_json(const Json& j, const char* what) {
  const Int v = int_from_json(j);
  if (!v.fits_slong_p()) bad(std::string(what) + " out of range");
  return v.get_si();
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad("not a decimal integer: " + j.dump());
    }
  }
  bad("expected an integer (number or decimal string), got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      bad("not a rational: " + j.dump());
    }
  }
  bad("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

Json to_json(const NumericalPolynomial& p) {
  Json coeffs = Json::array();
  for (const Int& a : p.standard()) coeffs.push_back(int_to_json(a));
  return Json{{"standard_coeffs", std::move(coeffs)}};
}

NumericalPolynomial polynomial_from_json(const Json& j) {
  const Json& coeffs = field(j, "standard_coeffs");
  if (!coeffs.is_array()) bad("standard_coeffs must be an array");
  std::vector<Int> high_to_low;
  high_to_low.reserve(coeffs.size());
  for (const Json& c : coeffs) high_to_low.push_back(int_from_json(c));
  return NumericalPolynomial::from_standard(std::move(high_to_low));
}

Json to_json(const ExponentMatrix& e) {
  Json rows = Json::array();
  for (const auto& row : e.rows) rows.push_back(row);
  return Json{{"m", e.m}, {"rows", std::move(rows)}};
}

ExponentMatrix matrix_from_json(const Json& j) {
  ExponentMatrix e;
  e.m = static_cast<int>(small_int_from_json(field(j, "m"), "m"));
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) bad("rows must be an array of rows");
  for (const Json& row : rows) {
    if (!row.is_array()) bad("each row must be an array");
    ExponentRow r;
    r.reserve(row.size());
    for (const Json& v : row) r.push_back(small_int_from_json(v, "matrix entry"));
    e.rows.push_back(std::move(r));
  }
  validate(e);
  return e;
}

ExponentMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  ExponentMatrix e;
  if (!(in >> e.m)) bad("matrix text must start with m");
  std::string line;
  std::getline(in, line);  // rest of the first line
  while (std::getline(in, line)) {
    std::istringstream row_in(line);
    ExponentRow row;
    std::int64_t v;
    while (row_in >> v) row.push_back(v);
    if (!row_in.eof()) bad("matrix rows must be space-separated integers");
    if (row.empty()) continue;
    e.rows.push_back(std::move(row));
  }
  validate(e);
  return e;
}

Json to_json(const GradedSystem& sys) {
  Json j{{"m", sys.m}, {"n", sys.n}};
  if (!sys.vars.empty()) j["vars"] = sys.vars;
  if (sys.form == GradedSystem::Form::generators) {
    Json gens = Json::array();
    for (const auto& g : sys.generators) {
      Json terms = Json::array();
      for (const auto& [t, c] : g.terms())
        terms.push_back(Json{{"exp", t.exponent},
                             {"comp", t.component},
                             {"coef", to_decimal(c)}});
      gens.push_back(Json{{"terms", std::move(terms)}});
    }
    j["generators"] = std::move(gens);
  } else {
    Json mats = Json::array();
    for (const auto& e : sys.leader_matrices) {
      Json rows = Json::array();
      for (const auto& row : e.rows) rows.push_back(row);
      mats.push_back(Json{{"rows", std::move(rows)}});
    }
    j["leader_matrices"] = std::move(mats);
    j["degrees"] = sys.degrees;
    if (!sys.orders.empty()) j["orders"] = sys.orders;
  }
  return j;
}

GradedSystem system_from_json(const Json& j) {
  GradedSystem sys;
  sys.m = static_cast<int>(small_int_from_json(field(j, "m"), "m"));
  sys.n = j.contains("n") ? static_cast<int>(small_int_from_json(j.at("n"), "n")) : 1;
  if (j.contains("vars")) {
    for (const Json& v : j.at("vars")) sys.vars.push_back(v.get<std::string>());
  }
  const bool has_generators = j.contains("generators");
  const bool has_matrices = j.contains("leader_matrices");
  if (has_generators == has_matrices)
    bad("a system needs exactly one of \"generators\" and \"leader_matrices\"");

  if (has_generators) {
    sys.form = GradedSystem::Form::generators;
    for (const Json& gen : j.at("generators")) {
      ModuleElement g;
      for (const Json& term : field(gen, "terms")) {
        ModuleTerm t;
        for (const Json& v : field(term, "exp"))
          t.exponent.push_back(small_int_from_json(v, "exponent"));
        t.component = term.contains("comp")
                          ? static_cast<int>(small_int_from_json(term.at("comp"), "comp"))
                          : 1;
        g.add_term(t, rat_from_json(field(term, "coef")));
      }
      sys.generators.push_back(std::move(g));
    }
  } else {
    sys.form = GradedSystem::Form::leader_matrices;
    for (const Json& mat : j.at("leader_matrices")) {
      Json with_m = mat;
      if (!with_m.contains("m")) with_m["m"] = sys.m;
      sys.leader_matrices.push_back(matrix_from_json(with_m));
    }
    if (j.contains("degrees"))
      for (const Json& v : j.at("degrees"))
        sys.degrees.push_back(small_int_from_json(v, "degree"));
    else
      sys.degrees.assign(static_cast<std::size_t>(sys.n), 0);
    if (j.contains("orders"))
      for (const Json& v : j.at("orders"))
        sys.orders.push_back(small_int_from_json(v, "order"));
  }
  validate(sys);
  return sys;
}

Json to_json(const DimPolyResult& r) {
  return Json{{"polynomial", to_json(r.polynomial)},
              {"stability_bound", r.stability_bound},
              {"rendering",
               Json{{"binomial", to_binomial_string(r.polynomial)},
                    {"expanded", to_expanded_string(r.polynomial)}}}};
}

Json to_json(const WDecision& d) {
  Json coeffs = Json::array();
  for (const Int& b : d.coefficients.b) coeffs.push_back(int_to_json(b));
  Json j{{"minimizing", std::move(coeffs)}, {"in_W", d.in_w}};
  if (!d.in_w)
    j["witness"] = Json{{"index", d.witness_index},
                        {"value", int_to_json(d.witness_value)}};
  return j;
}

Json to_json(const BoundReport& r) {
  Json orders = Json::array();
  for (const Int& e : r.orders) orders.push_back(int_to_json(e));
  Json j{{"codim", r.codim},
         {"orders", std::move(orders)},
         {"bound", int_to_json(r.bound)},
         {"method", r.method},
         {"discrepancy_flags", r.discrepancy_flags}};
  if (r.derivation) {
    Json b = Json::array(), c = Json::array(), stages = Json::array();
    for (const Int& v : r.derivation->b) b.push_back(int_to_json(v));
    for (const Int& v : r.derivation->c) c.push_back(int_to_json(v));
    for (const auto& p : r.derivation->stages) stages.push_back(to_json(p));
    j["derivation"] = Json{{"b", std::move(b)}, {"c", std::move(c)},
                           {"stages", std::move(stages)}};
  }
  return j;
}

Json to_json(const Invariants& inv) {
  if (inv.null_module) return Json{{"null_module", true}};
  return Json{{"type", inv.type},
              {"codim", inv.codim},
              {"typical_dimension", int_to_json(inv.typical_dimension)}};
}

Json to_json(const BoundVerdict& v) {
  Json j{{"invariants", to_json(v.invariants)}, {"holds", v.holds}};
  if (v.report) j["bound_report"] = to_json(*v.report);
  return j;
}

std::vector<std::vector<std::optional<std::int64_t>>> jacobi_matrix_from_json(
    const Json& j) {
  const Json& rows = j.is_object() ? field(j, "matrix") : j;
  if (!rows.is_array()) bad("expected a matrix (array of rows)");
  std::vector<std::vector<std::optional<std::int64_t>>> out;
  for (const Json& row : rows) {
    if (!row.is_array()) bad("each matrix row must be an array");
    std::vector<std::optional<std::int64_t>> r;
    for (const Json& v : row) {
      if (v.is_null())
        r.push_back(std::nullopt);
      else
        r.push_back(small_int_from_json(v, "matrix entry"));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kolchin
