#include "cabform/io.hpp"

#include <fstream>

namespace cabform {

Json polynomialToJson(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json vars = Json::object();
    for (const auto& [v, e] : m.factors()) vars[v.jsonName()] = e;
    terms.push_back(Json{{"coeff", toString(c)}, {"vars", std::move(vars)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Polynomial polynomialFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON must be an object with a \"terms\" array");
  Polynomial out;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string())
      throw ParseError("polynomial term must carry a string \"coeff\"");
    const Rational coeff = parseRational(term["coeff"].get<std::string>());
    Monomial m;
    if (term.contains("vars")) {
      if (!term["vars"].is_object())
        throw ParseError("polynomial term \"vars\" must be an object");
      for (const auto& [key, value] : term["vars"].items()) {
        const auto var = VarId::parse(key);
        if (!var) throw ParseError("unknown variable '" + key + "'");
        if (!value.is_number_integer() || value.get<long long>() < 1)
          throw ParseError("exponent of '" + key + "' must be a positive integer");
        m = m.times(Monomial::variable(*var, value.get<int>()));
      }
    }
    out += Polynomial::term(coeff, m);
  }
  return out;
}

CurveSpec curveFromJson(const Json& j) {
  if (!j.is_object()) throw InvalidCurveError("curve JSON must be an object");
  if (!j.contains("a") || !j.contains("b") || !j["a"].is_number_integer() ||
      !j["b"].is_number_integer())
    throw InvalidCurveError("curve JSON requires integer fields \"a\" and \"b\"");
  const int a = j["a"].get<int>();
  const int b = j["b"].get<int>();
  std::vector<CurveSpec::Entry> entries;
  if (j.contains("coefficients")) {
    if (!j["coefficients"].is_array())
      throw InvalidCurveError("\"coefficients\" must be an array");
    for (const auto& e : j["coefficients"]) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
          !e.contains("value") || !e["i"].is_number_integer() ||
          !e["j"].is_number_integer())
        throw InvalidCurveError(
            "each coefficient requires integer \"i\", \"j\" and a \"value\"");
      CurveSpec::Entry entry;
      entry.i = e["i"].get<int>();
      entry.j = e["j"].get<int>();
      if (!e["value"].is_string())
        throw InvalidCurveError("coefficient \"value\" must be a string");
      const std::string value = e["value"].get<std::string>();
      if (value != "symbolic") entry.value = parseRational(value);
      entries.push_back(std::move(entry));
    }
  }
  return CurveSpec(a, b, std::move(entries));
}

CurveSpec curveFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("curve file '" + path + "' is not valid JSON: " + e.what());
  }
  return curveFromJson(j);
}

Json reportToJson(const VerificationReport& report) {
  Json out{{"check", report.check},
           {"status", statusName(report.status)},
           {"mode", report.mode ? Json(modeName(*report.mode)) : Json(nullptr)},
           {"witness", report.witness ? polynomialToJson(*report.witness)
                                      : Json(nullptr)},
           {"elapsedMs", report.elapsed_ms}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

}  // namespace cabform
