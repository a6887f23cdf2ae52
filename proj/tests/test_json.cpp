#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "fixtures.hpp"
#include "multifan/errors.hpp"
#include "multifan/fan.hpp"
#include "multifan/json_io.hpp"
#include "multifan/rng.hpp"
#include "multifan/volume.hpp"

using namespace multifan;
using doctest::Contains;

namespace {

ErrorKind kindOf(const std::function<void()>& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("rationals travel as strings") {
  CHECK(rationalToJson(Rational(3, 4)) == Json("3/4"));
  CHECK(rationalToJson(Rational(5)) == Json("5"));
  CHECK(rationalToJson(Rational(-7, 2)) == Json("-7/2"));
  CHECK(rationalFromJson(nlohmann::json("3/4")) == Rational(3, 4));
  CHECK(rationalFromJson(nlohmann::json("-6/8")) == Rational(-3, 4));
  CHECK(rationalFromJson(nlohmann::json(5)) == Rational(5));
  CHECK_THROWS_AS(rationalFromJson(nlohmann::json(2.5)), Error);
  CHECK_THROWS_AS(rationalFromJson(nlohmann::json("1/0")), Error);
  CHECK_THROWS_AS(rationalFromJson(nlohmann::json("three")), Error);
}

TEST_CASE("simplices shift to one-based indices on the wire") {
  CHECK(simplexToJson({0, 1, 4}) == Json::array({1, 2, 5}));
  CHECK(simplexFromJson(nlohmann::json::array({1, 2, 5})) == std::vector<int>{0, 1, 4});
  CHECK_THROWS_AS(simplexFromJson(nlohmann::json::array({0, 1})), Error);
  CHECK_THROWS_AS(simplexFromJson(nlohmann::json::array({1, -1})), Error);
  CHECK_THROWS_AS(simplexFromJson(nlohmann::json("1")), Error);
}

TEST_CASE("fan documents round-trip every field") {
  Rng rng(17);
  std::vector<MultiFan> fans = {fixtures::cp2(), fixtures::square(), fixtures::octahedron(),
                                fixtures::star(), fixtures::torus(),
                                fixtures::randomCompleteFan(rng, 2, 6)};
  for (const MultiFan& fan : fans) {
    Json doc = fanToJson(fan);
    CHECK(doc.at("format") == "multifan/1");
    CHECK(doc.at("type") == "multifan");
    MultiFan back = fanFromJson(doc);
    CHECK(back.n == fan.n);
    CHECK(back.m == fan.m);
    CHECK(back.lambda == fan.lambda);
    CHECK(back.chain == fan.chain);
  }
}

TEST_CASE("weights are keyed by the increasing vertex order") {
  Json doc = fanToJson(fixtures::cp2());
  for (const auto& entry : doc.at("weights")) {
    const auto& wire = entry.at("simplex");
    CHECK(std::is_sorted(wire.begin(), wire.end()));
  }

  Json unsorted = doc;
  unsorted["weights"][0]["simplex"] = Json::array({2, 1});
  CHECK_THROWS_WITH_AS(fanFromJson(unsorted), Contains("sorted strictly increasing"), Error);

  Json repeated = doc;
  repeated["weights"][0]["simplex"] = Json::array({2, 2});
  CHECK_THROWS_AS(fanFromJson(repeated), Error);

  Json duplicate = doc;
  duplicate["weights"].push_back(duplicate["weights"][0]);
  CHECK_THROWS_WITH_AS(fanFromJson(duplicate), Contains("duplicate"), Error);
}

TEST_CASE("explicit zero weights mean unsupported") {
  Json doc = fanToJson(fixtures::square());
  doc["weights"][0]["w"] = "0";
  MultiFan back = fanFromJson(doc);
  CHECK(back.chain.size() == 3);
  CHECK_FALSE(back.chain.count({0, 1}));
  CHECK(validate(back).valid);
}

TEST_CASE("malformed fan documents raise validation errors") {
  Json good = fanToJson(fixtures::cp2());

  auto mutate = [&](const std::function<void(Json&)>& change) {
    Json doc = good;
    change(doc);
    CHECK(kindOf([&] { fanFromJson(doc); }) == ErrorKind::Validation);
  };

  mutate([](Json& d) { d.erase("format"); });
  mutate([](Json& d) { d["format"] = "multifan/2"; });
  mutate([](Json& d) { d["type"] = "fan"; });
  mutate([](Json& d) { d.erase("n"); });
  mutate([](Json& d) { d["n"] = 0; });
  mutate([](Json& d) { d["m"] = -1; });
  mutate([](Json& d) { d["lambda"].erase(2); });
  mutate([](Json& d) { d["lambda"][0] = Json::array({"1"}); });
  mutate([](Json& d) { d["weights"] = "none"; });
  mutate([](Json& d) { d["weights"][0].erase("w"); });
  mutate([](Json& d) { d["weights"][0]["simplex"] = Json::array({1, 2, 3}); });
  mutate([](Json& d) { d["weights"][0]["simplex"] = Json::array({1, 4}); });

  try {
    fanFromJson(nlohmann::json::array());
    FAIL("array accepted as a fan document");
  } catch (const Error& e) {
    CHECK_MESSAGE(std::string(e.what()).find("malformed document") == 0, e.what());
  }
}

TEST_CASE("serialization is byte-deterministic") {
  MultiFan fan = fixtures::star();
  std::string once = fanToJson(fan).dump(2);
  std::string twice = fanToJson(fan).dump(2);
  CHECK(once == twice);

  MultiFan back = fanFromJson(nlohmann::json::parse(once));
  CHECK(fanToJson(back).dump(2) == once);

  Rng rng(3);
  HomogeneousForm v = volumePolyIndex(fan, rng).form;
  std::string formOnce = formToJson(v).dump(2);
  CHECK(formToJson(formFromJson(nlohmann::json::parse(formOnce))).dump(2) == formOnce);
}

TEST_CASE("form documents round-trip") {
  Rng rng(23);
  HomogeneousForm v = volumePolyIndex(fixtures::octahedron(), rng).form;
  Json doc = formToJson(v);
  CHECK(doc.at("type") == "form");
  CHECK(formFromJson(doc) == v);

  Json wrongDegree = doc;
  wrongDegree["terms"][0]["exp"] = Json::array({1, 0, 0, 0, 0, 0});
  CHECK_THROWS_WITH_AS(formFromJson(wrongDegree), Contains("degree mismatch"), Error);

  Json wrongLength = doc;
  wrongLength["terms"][0]["exp"] = Json::array({1, 1, 1});
  CHECK_THROWS_AS(formFromJson(wrongLength), Error);

  Json negative = doc;
  negative["terms"][0]["exp"] = Json::array({-1, 2, 1, 1, 0, 0});
  CHECK_THROWS_AS(formFromJson(negative), Error);

  // Feeding a fan document to the form reader trips the header check.
  CHECK_THROWS_WITH_AS(formFromJson(fanToJson(fixtures::cp2())), Contains("type"), Error);
}

TEST_CASE("complex documents round-trip") {
  SimplicialComplex k = fixtures::icosahedron();
  Json doc = complexToJson(k);
  CHECK(doc.at("type") == "complex");
  SimplicialComplex back = complexFromJson(doc);
  CHECK(back.m() == k.m());
  CHECK(back.facets() == k.facets());

  Json degenerate = doc;
  degenerate["facets"] = Json::array({Json::array({1, 1})});
  CHECK_THROWS_WITH_AS(complexFromJson(degenerate), Contains("malformed"), Error);
}

TEST_CASE("chain documents round-trip and accumulate duplicates") {
  Chain chain = fixtures::octahedron().underlyingChain();
  Json doc = chainToJson(chain);
  Chain back = chainFromJson(doc);
  CHECK(back.degree == chain.degree);
  CHECK(back.terms == chain.terms);

  // Duplicate chain terms add up; opposite coefficients cancel away.
  Json cancel;
  cancel["format"] = "multifan/1";
  cancel["type"] = "chain";
  cancel["degree"] = 1;
  cancel["terms"] = Json::array({Json{{"simplex", {1, 2}}, {"coef", "1"}},
                                 Json{{"simplex", {1, 2}}, {"coef", "-1"}}});
  CHECK(chainFromJson(cancel).terms.empty());

  Json badSize = doc;
  badSize["terms"][0]["simplex"] = Json::array({1, 2});
  CHECK_THROWS_WITH_AS(chainFromJson(badSize), Contains("degree+1"), Error);
}

TEST_CASE("polytope documents round-trip") {
  MultiPolytope p = fixtures::withConstants(fixtures::square(), {1, 2, 3, 4});
  Json doc = polytopeToJson(p);
  CHECK(doc.at("type") == "multipolytope");
  MultiPolytope back = polytopeFromJson(doc);
  CHECK(back.fan.chain == p.fan.chain);
  CHECK(back.c == p.c);

  Json shortC = doc;
  shortC["c"] = Json::array({"1", "2"});
  CHECK_THROWS_WITH_AS(polytopeFromJson(shortC), Contains("one support parameter"), Error);
}

TEST_CASE("functional documents round-trip") {
  TopFunctional f;
  f.p = 2;
  f.n = 2;
  f.values = {{{2, 0}, Rational(1)}, {{1, 1}, Rational(3, 2)}};
  Json doc = functionalToJson(f);
  CHECK(doc.at("type") == "functional");
  TopFunctional back = functionalFromJson(doc);
  CHECK(back.p == f.p);
  CHECK(back.n == f.n);
  CHECK(back.values == f.values);

  Json wrongDegree = doc;
  wrongDegree["values"][0]["exp"] = Json::array({1, 0});
  CHECK_THROWS_WITH_AS(functionalFromJson(wrongDegree), Contains("degree"), Error);

  Json wrongArity = doc;
  wrongArity["values"][0]["exp"] = Json::array({2, 0, 0});
  CHECK_THROWS_AS(functionalFromJson(wrongArity), Error);

  Json zeroP = doc;
  zeroP["p"] = 0;
  CHECK_THROWS_AS(functionalFromJson(zeroP), Error);
}

TEST_CASE("files load back and io failures are validation errors") {
  std::string path = "/tmp/multifan_io_check.json";
  Json doc = fanToJson(fixtures::torus());
  writeTextFile(path, doc.dump(2));
  MultiFan back = fanFromJson(loadJsonFile(path));
  CHECK(back.chain == fixtures::torus().chain);

  CHECK(kindOf([] { loadJsonFile("/nonexistent/nowhere.json"); }) == ErrorKind::Validation);

  writeTextFile(path, "this is not json {{");
  CHECK_THROWS_WITH_AS(loadJsonFile(path), Contains("parse failure"), Error);
  std::remove(path.c_str());
}
