#include "multifan/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "multifan/errors.hpp"

namespace multifan {

namespace {

constexpr const char* kFormat = "multifan/1";

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::Validation, "malformed document: " + what);
}

void checkHeader(const nlohmann::json& j, const std::string& type) {
  if (!j.is_object()) malformed("expected a JSON object");
  if (!j.contains("format") || j.at("format") != kFormat)
    malformed("missing or unsupported \"format\" (want \"" + std::string(kFormat) + "\")");
  if (!j.contains("type") || j.at("type") != type)
    malformed("missing or wrong \"type\" (want \"" + type + "\")");
}

int intField(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) malformed("field \"" + key + "\" must be an integer");
  return j.at(key).get<int>();
}

const nlohmann::json& arrayField(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array()) malformed("field \"" + key + "\" must be an array");
  return j.at(key);
}

std::vector<int> exponentsFromJson(const nlohmann::json& j) {
  if (!j.is_array()) malformed("exponent vector must be an array");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 0) malformed("exponents must be nonnegative integers");
    e.push_back(x.get<int>());
  }
  return e;
}

}  // namespace

Json rationalToJson(const Rational& x) { return formatRational(x); }

Rational rationalFromJson(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) malformed("rationals are strings like \"3/4\"");
  return parseRational(j.get<std::string>());
}

Json vectorToJson(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rationalToJson(x));
  return out;
}

QVector vectorFromJson(const nlohmann::json& j) {
  if (!j.is_array()) malformed("expected an array of rationals");
  QVector out;
  for (const auto& x : j) out.push_back(rationalFromJson(x));
  return out;
}

Json simplexToJson(const std::vector<int>& simplex) {
  Json out = Json::array();
  for (int v : simplex) out.push_back(v + 1);
  return out;
}

std::vector<int> simplexFromJson(const nlohmann::json& j) {
  if (!j.is_array()) malformed("simplices are arrays of 1-based vertex indices");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) malformed("vertex indices are 1-based positive integers");
    out.push_back(x.get<int>() - 1);
  }
  return out;
}

Json fanToJson(const MultiFan& fan) {
  Json out;
  out["format"] = kFormat;
  out["type"] = "multifan";
  out["n"] = fan.n;
  out["m"] = fan.m;
  Json lambda = Json::array();
  for (const auto& l : fan.lambda) lambda.push_back(vectorToJson(l));
  out["lambda"] = std::move(lambda);
  Json weights = Json::array();
  for (const auto& [simplex, coef] : fan.chain) {
    Json entry;
    entry["simplex"] = simplexToJson(simplex);
    entry["w"] = rationalToJson(coef);
    weights.push_back(std::move(entry));
  }
  out["weights"] = std::move(weights);
  return out;
}

MultiFan fanFromJson(const nlohmann::json& j) {
  checkHeader(j, "multifan");
  MultiFan fan;
  fan.n = intField(j, "n");
  fan.m = intField(j, "m");
  if (fan.n < 1) malformed("\"n\" must be at least 1");
  if (fan.m < 0) malformed("\"m\" must be nonnegative");
  for (const auto& l : arrayField(j, "lambda")) fan.lambda.push_back(vectorFromJson(l));
  if (static_cast<int>(fan.lambda.size()) != fan.m) malformed("expected one lambda row per vertex slot");
  for (const auto& l : fan.lambda)
    if (static_cast<int>(l.size()) != fan.n) malformed("each lambda row needs n coordinates");
  for (const auto& entry : arrayField(j, "weights")) {
    if (!entry.is_object() || !entry.contains("simplex")) malformed("weight entries need a \"simplex\"");
    std::vector<int> simplex = simplexFromJson(entry.at("simplex"));
    if (static_cast<int>(simplex.size()) != fan.n) malformed("weighted simplices are n-subsets");
    if (!std::is_sorted(simplex.begin(), simplex.end()) ||
        std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
      malformed("weighted simplices must be sorted strictly increasing");
    for (int v : simplex)
      if (v >= fan.m) malformed("weighted simplex vertex out of range");
    if (!entry.contains("w")) malformed("weight entries need a \"w\"");
    Rational w = rationalFromJson(entry.at("w"));
    if (w == 0) continue;  // explicit zero means unsupported
    if (fan.chain.count(simplex)) malformed("duplicate weighted simplex");
    fan.chain[simplex] = w;
  }
  return fan;
}

Json formToJson(const HomogeneousForm& f) {
  Json out;
  out["format"] = kFormat;
  out["type"] = "form";
  out["m"] = f.m;
  out["degree"] = f.degree;
  Json terms = Json::array();
  for (const auto& [e, coef] : f.terms) {
    Json entry;
    entry["exp"] = e;
    entry["coef"] = rationalToJson(coef);
    terms.push_back(std::move(entry));
  }
  out["terms"] = std::move(terms);
  return out;
}

HomogeneousForm formFromJson(const nlohmann::json& j) {
  checkHeader(j, "form");
  int m = intField(j, "m");
  int degree = intField(j, "degree");
  if (m < 0 || degree < 0) malformed("\"m\" and \"degree\" must be nonnegative");
  HomogeneousForm f = HomogeneousForm::zero(m, degree);
  for (const auto& entry : arrayField(j, "terms")) {
    if (!entry.is_object() || !entry.contains("exp") || !entry.contains("coef"))
      malformed("form terms need \"exp\" and \"coef\"");
    Exponents e = exponentsFromJson(entry.at("exp"));
    if (static_cast<int>(e.size()) != m) malformed("term exponent length must be m");
    if (degreeOf(e) != degree) malformed("term degree mismatch");
    f.addTerm(e, rationalFromJson(entry.at("coef")));
  }
  return f;
}

Json complexToJson(const SimplicialComplex& k) {
  Json out;
  out["format"] = kFormat;
  out["type"] = "complex";
  out["m"] = k.m();
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(simplexToJson(f));
  out["facets"] = std::move(facets);
  return out;
}

SimplicialComplex complexFromJson(const nlohmann::json& j) {
  checkHeader(j, "complex");
  int m = intField(j, "m");
  std::vector<std::vector<int>> facets;
  for (const auto& f : arrayField(j, "facets")) facets.push_back(simplexFromJson(f));
  try {
    return SimplicialComplex(m, std::move(facets));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

Json chainToJson(const Chain& c) {
  Json out;
  out["format"] = kFormat;
  out["type"] = "chain";
  out["degree"] = c.degree;
  Json terms = Json::array();
  for (const auto& [simplex, coef] : c.terms) {
    Json entry;
    entry["simplex"] = simplexToJson(simplex);
    entry["coef"] = rationalToJson(coef);
    terms.push_back(std::move(entry));
  }
  out["terms"] = std::move(terms);
  return out;
}

Chain chainFromJson(const nlohmann::json& j) {
  checkHeader(j, "chain");
  Chain c;
  c.degree = intField(j, "degree");
  for (const auto& entry : arrayField(j, "terms")) {
    if (!entry.is_object() || !entry.contains("simplex") || !entry.contains("coef"))
      malformed("chain terms need \"simplex\" and \"coef\"");
    std::vector<int> simplex = simplexFromJson(entry.at("simplex"));
    if (static_cast<int>(simplex.size()) != c.degree + 1) malformed("chain simplex size must be degree+1");
    c.add(simplex, rationalFromJson(entry.at("coef")));
  }
  return c;
}

Json polytopeToJson(const MultiPolytope& p) {
  Json out;
  out["format"] = kFormat;
  out["type"] = "multipolytope";
  out["fan"] = fanToJson(p.fan);
  out["c"] = vectorToJson(p.c);
  return out;
}

MultiPolytope polytopeFromJson(const nlohmann::json& j) {
  checkHeader(j, "multipolytope");
  if (!j.contains("fan")) malformed("multipolytope needs a \"fan\"");
  MultiPolytope p;
  p.fan = fanFromJson(j.at("fan"));
  p.c = vectorFromJson(j.contains("c") ? j.at("c") : nlohmann::json::array());
  if (static_cast<int>(p.c.size()) != p.fan.m) malformed("need one support parameter per vertex slot");
  return p;
}

Json functionalToJson(const TopFunctional& f) {
  Json out;
  out["format"] = kFormat;
  out["type"] = "functional";
  out["p"] = f.p;
  out["n"] = f.n;
  Json values = Json::array();
  for (const auto& [e, value] : f.values) {
    Json entry;
    entry["exp"] = e;
    entry["value"] = rationalToJson(value);
    values.push_back(std::move(entry));
  }
  out["values"] = std::move(values);
  return out;
}

TopFunctional functionalFromJson(const nlohmann::json& j) {
  checkHeader(j, "functional");
  TopFunctional f;
  f.p = intField(j, "p");
  f.n = intField(j, "n");
  if (f.p < 1 || f.n < 1) malformed("\"p\" and \"n\" must be positive");
  for (const auto& entry : arrayField(j, "values")) {
    if (!entry.is_object() || !entry.contains("exp") || !entry.contains("value"))
      malformed("functional entries need \"exp\" and \"value\"");
    Exponents e = exponentsFromJson(entry.at("exp"));
    if (static_cast<int>(e.size()) != f.p) malformed("functional exponent length must be p");
    if (degreeOf(e) != f.n) malformed("functional entries must have degree n");
    f.values[e] = rationalFromJson(entry.at("value"));
  }
  return f;
}

nlohmann::json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Validation, "cannot open input file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Validation, "JSON parse failure in " + path + ": " + e.what());
  }
}

void writeTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Validation, "cannot open output file: " + path);
  out << content;
  if (!out) throw Error(ErrorKind::Validation, "failed writing output file: " + path);
}

}  // namespace multifan
