#pragma once

#include <string>

#include "json.hpp"
#include "multifan/fan.hpp"
#include "multifan/forms.hpp"
#include "multifan/polytope.hpp"
#include "multifan/recognize.hpp"
#include "multifan/simplicial.hpp"

namespace multifan {

/// Wire conventions: every document carries "format":"multifan/1" and a
/// "type"; vertex indices are 1-based on the wire and 0-based in memory;
/// rationals are strings "p/q" (or "p"); fan weights are written relative to
/// the increasing vertex order of their simplex. Emission uses ordered maps
/// and sorted containers, so equal values serialize byte-identically.
using Json = nlohmann::ordered_json;

Json rationalToJson(const Rational& x);
Rational rationalFromJson(const nlohmann::json& j);

Json vectorToJson(const QVector& v);
QVector vectorFromJson(const nlohmann::json& j);

Json simplexToJson(const std::vector<int>& simplex);  // shifts to 1-based
std::vector<int> simplexFromJson(const nlohmann::json& j);

Json fanToJson(const MultiFan& fan);
MultiFan fanFromJson(const nlohmann::json& j);

Json formToJson(const HomogeneousForm& f);
HomogeneousForm formFromJson(const nlohmann::json& j);

Json complexToJson(const SimplicialComplex& k);
SimplicialComplex complexFromJson(const nlohmann::json& j);

Json chainToJson(const Chain& c);
Chain chainFromJson(const nlohmann::json& j);

Json polytopeToJson(const MultiPolytope& p);
MultiPolytope polytopeFromJson(const nlohmann::json& j);

Json functionalToJson(const TopFunctional& f);
TopFunctional functionalFromJson(const nlohmann::json& j);

/// Parses a file, mapping I/O and syntax problems to validation errors.
nlohmann::json loadJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

}  // namespace multifan
