#include "plucker/cli.hpp"

#include "plucker/assumptions.hpp"
#include "plucker/formulas.hpp"
#include "plucker/oracle.hpp"
#include "plucker/svg.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace plucker::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input problems: unreadable source, bad JSON, unknown command or format.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json polygon_json(const LatticePolygon& p) { return Json::parse(to_json_array(p)); }

Json rational_json(const Rational& r) { return to_string(r); }

// Integral values as numbers, others as "p/q".
Json count_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Json fan_json(const WeightedFan& fan) {
  Json j = Json::object();
  for (const auto& [g, w] : fan.normalized().ccw())
    j["(" + std::to_string(g.u()) + "," + std::to_string(g.v()) + ")"] = w;
  return j;
}

std::string read_source(const std::string& source, std::istream& in) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '[') return source;
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) throw InputError("cannot read polygon file '" + source + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

OracleConfig oracle_config(const Request& r) {
  OracleConfig cfg;
  if (r.seed) cfg.seed = *r.seed;
  if (r.coeff_bound) cfg.coeff_bound = *r.coeff_bound;
  cfg.validate();
  return cfg;
}

Json verdicts(const AssumptionReport& a) {
  return {{"a1", to_string(a.a1)}, {"a2", to_string(a.a2)}, {"a3", to_string(a.a3)},
          {"all_verified", a.all_verified()}};
}

Json report(const LatticePolygon& p) {
  const PluckerReport r = plucker_report(p);
  return {{"polygon", polygon_json(r.polygon)},
          {"vol", rational_json(r.vol)},
          {"inflections", r.inflections},
          {"bitangents", count_json(r.bitangents)},
          {"vertical_tangents", r.vertical_tangents},
          {"euler_char", r.euler_char},
          {"genus", r.genus},
          {"dual_fan", fan_json(r.dual_fan)},
          {"dual_polygon", polygon_json(r.dual_polygon)},
          {"dual_vol", rational_json(r.dual_vol)}};
}

Json dual(const LatticePolygon& p) {
  const LatticePolygon d = dual_polygon(p);
  return {{"polygon", polygon_json(p)},
          {"dual_fan", fan_json(dual_fan(p))},
          {"dual_polygon", polygon_json(d)},
          {"dual_vol", rational_json(area(d))}};
}

Json assumptions(const LatticePolygon& p) {
  CheckOptions opts;
  opts.budget = default_search_budget();
  const AssumptionReport a = full_assumption_report(p, opts);
  Json j = {{"polygon", polygon_json(p)}};
  j.update(verdicts(a));
  if (a.thin)
    j["thin_triangle"] = {{"k", a.thin->k},
                          {"translation", {a.thin->translation.x, a.thin->translation.y}},
                          {"rotation_power", a.thin->rotation_power}};
  Json ev = Json::array();
  for (const auto& e : a.evidence)
    ev.push_back({{"condition", e.condition}, {"direction", e.direction}, {"outcome", e.outcome}, {"passed", e.passed}});
  j["evidence"] = ev;
  return j;
}

Json verify(const LatticePolygon& p, const Request& r, int& exit_code) {
  const OracleConfig cfg = oracle_config(r);
  CheckOptions opts;
  opts.budget = default_search_budget();
  const AssumptionReport a = full_assumption_report(p, opts);
  Json j = {{"polygon", polygon_json(p)}, {"seed", cfg.seed}, {"assumptions", verdicts(a)}, {"advisory", false}};
  if (!a.all_verified() && !r.advisory) {
    j["status"] = "skipped";
    j["reason"] = "assumptions not all verified; pass --advisory to run the oracle anyway";
    return j;
  }
  j["advisory"] = !a.all_verified();
  Json checks = Json::array();
  bool agree = true;
  auto add = [&](const char* name, Int formula, Int oracle) {
    checks.push_back({{"quantity", name}, {"formula", formula}, {"oracle", oracle}, {"pass", formula == oracle}});
    agree = agree && formula == oracle;
  };
  add("inflections", inflection_count(p), inflection_oracle(p, cfg));
  add("vertical_tangents", vertical_tangent_count(p), vertical_tangent_oracle(p, cfg));
  j["checks"] = checks;
  j["status"] = agree ? "pass" : "mismatch";
  if (!agree) exit_code = kMismatch;
  return j;
}

Json implicitize(const LatticePolygon& p, const Request& r, int& exit_code) {
  const DualImplicitization d = implicitize_dual(p, oracle_config(r));
  Json coeffs = Json::array();
  for (const auto& [e, c] : d.coefficients)
    coeffs.push_back({{"exponent", {e.x, e.y}}, {"re", c.real()}, {"im", c.imag()}});
  Json j = {{"polygon", polygon_json(p)},
            {"predicted", polygon_json(d.predicted)},
            {"observed", d.observed ? polygon_json(*d.observed) : Json(nullptr)},
            {"kernel_dimension", d.kernel_dimension},
            {"matches", d.matches()},
            {"coefficients", coeffs}};
  if (!d.matches()) exit_code = kMismatch;
  return j;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// One "key: value" line per field; arrays of objects get one indented line
// per element.
std::string to_text(const Json& j) {
  std::ostringstream os;
  for (const auto& [key, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << key << ":\n";
      for (const auto& e : v) {
        os << " ";
        for (const auto& [k2, v2] : e.items()) os << ' ' << k2 << '=' << scalar_text(v2);
        os << '\n';
      }
    } else if (v.is_object() && !v.empty() && !v.begin()->is_structured() && key != "dual_fan") {
      os << key << ":";
      for (const auto& [k2, v2] : v.items()) os << ' ' << k2 << '=' << scalar_text(v2);
      os << '\n';
    } else {
      os << key << ": " << scalar_text(v) << '\n';
    }
  }
  return os.str();
}

Response failure(int code, const std::string& message, const std::string& format) {
  if (format == "text" || format == "svg") return {code, "error: " + message + "\n"};
  return {code, Json{{"error", message}}.dump() + "\n"};
}

}  // namespace

Response run(const Request& request, std::istream& in) {
  std::string format = request.format;
  if (format.empty()) format = request.command == "render" ? "svg" : "json";
  try {
    static const char* const commands[] = {"report", "dual", "assumptions", "verify", "implicitize", "render"};
    if (std::find(std::begin(commands), std::end(commands), request.command) == std::end(commands))
      throw InputError("unknown command '" + request.command + "'");
    if (format != "json" && format != "text" && format != "svg")
      throw InputError("unknown format '" + format + "'");
    if ((format == "svg") != (request.command == "render"))
      throw InputError("format '" + format + "' does not apply to command '" + request.command + "'");

    const LatticePolygon p = parse_polygon_json(read_source(request.polygon_source, in));
    if (request.command == "render") return {kOk, render_svg(p)};

    int code = kOk;
    Json out;
    if (request.command == "report") out = report(p);
    else if (request.command == "dual") out = dual(p);
    else if (request.command == "assumptions") out = assumptions(p);
    else if (request.command == "verify") out = verify(p, request, code);
    else out = implicitize(p, request, code);
    return {code, format == "json" ? out.dump() + "\n" : to_text(out)};
  } catch (const InputError& e) {
    return failure(kInputError, e.what(), format);
  } catch (const std::invalid_argument& e) {
    return failure(kInputError, e.what(), format);
  } catch (const RetriesExhausted& e) {
    return failure(kDegenerate, e.what(), format);
  }
}

Response run(const Request& request) { return run(request, std::cin); }

}  // namespace plucker::cli
