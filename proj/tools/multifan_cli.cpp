// Batch front-end for the multifan library: reads JSON documents, dispatches
// one subcommand, and prints a JSON report (or SVG) to stdout or --out.
// Everything is deterministic for a fixed command line: seeds default to 0
// and all containers serialize in sorted order.
//
// Exit codes mirror the library error taxonomy: 0 success, 2 validation
// (malformed or invalid input), 3 precondition (valid input outside an
// operation's domain), 4 internal (a certified identity failed).

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multifan/algebra.hpp"
#include "multifan/errors.hpp"
#include "multifan/fan.hpp"
#include "multifan/forms.hpp"
#include "multifan/json_io.hpp"
#include "multifan/polytope.hpp"
#include "multifan/recognize.hpp"
#include "multifan/rng.hpp"
#include "multifan/simplicial.hpp"
#include "multifan/skew.hpp"
#include "multifan/svg.hpp"
#include "multifan/volume.hpp"

using namespace multifan;

namespace {

constexpr const char* kFormat = "multifan/1";

// ---------------------------------------------------------------- plumbing

struct Options {
  std::uint64_t seed = 0;
  long long samples = -1;  // -1 = per-command default
  std::string out;

  long long samplesOr(long long fallback) const { return samples < 0 ? fallback : samples; }
};

void emitText(const std::string& payload, const Options& opt) {
  if (opt.out.empty())
    std::cout << payload;
  else
    writeTextFile(opt.out, payload);
}

void emitJson(const Json& doc, const Options& opt) { emitText(doc.dump(2) + "\n", opt); }

Json report(const std::string& type) {
  Json doc;
  doc["format"] = kFormat;
  doc["type"] = type;
  return doc;
}

std::vector<std::string> splitOn(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

QVector parseVector(const std::string& text, const std::string& what) {
  requireValid(!text.empty(), what + ": expected comma-separated rationals");
  QVector out;
  for (const std::string& part : splitOn(text, ',')) out.push_back(parseRational(part));
  return out;
}

// Comma-separated 1-based indices, returned sorted and 0-based.
std::vector<int> parseIndexSet(const std::string& text, const std::string& what) {
  requireValid(!text.empty(), what + ": expected comma-separated 1-based indices");
  std::vector<int> out;
  for (const std::string& part : splitOn(text, ',')) {
    Rational q = parseRational(part);
    requireValid(q >= 1 && boost::multiprecision::denominator(q) == 1,
                 what + ": indices are 1-based integers");
    out.push_back(q.convert_to<int>() - 1);
  }
  std::sort(out.begin(), out.end());
  requireValid(std::adjacent_find(out.begin(), out.end()) == out.end(),
               what + ": indices must be distinct");
  return out;
}

Exponents parseExponents(const std::string& text) {
  Exponents out;
  for (const std::string& part : splitOn(text, ',')) {
    Rational q = parseRational(part);
    requireValid(q >= 0 && boost::multiprecision::denominator(q) == 1,
                 "exponents are nonnegative integers");
    out.push_back(q.convert_to<int>());
  }
  return out;
}

std::vector<QVector> parseVectorList(const std::string& text, const std::string& what) {
  std::vector<QVector> out;
  for (const std::string& part : splitOn(text, ';')) out.push_back(parseVector(part, what));
  return out;
}

// "i,j:coef;k,l:coef" with 1-based coordinate indices, e.g. "1,2:1" for the
// standard area form.
SkewForm parseSkewForm(const std::string& text, int n) {
  requireValid(!text.empty(), "alternating form: expected terms like \"1,2:1\"");
  SkewForm mu;
  mu.n = n;
  mu.k = -1;
  for (const std::string& term : splitOn(text, ';')) {
    auto colon = term.find(':');
    requireValid(colon != std::string::npos, "alternating form terms look like \"1,2:coef\"");
    std::vector<int> set = parseIndexSet(term.substr(0, colon), "alternating form");
    for (int i : set) requireValid(i < n, "alternating form index out of range");
    if (mu.k < 0) mu.k = static_cast<int>(set.size());
    requireValid(static_cast<int>(set.size()) == mu.k, "alternating form terms must share one rank");
    mu.add(set, parseRational(term.substr(colon + 1)));
  }
  return mu;
}

MultiFan loadFan(const std::string& path) {
  MultiFan fan = fanFromJson(loadJsonFile(path));
  requireValidFan(fan);
  return fan;
}

MultiPolytope polytopeWith(const MultiFan& fan, const std::string& cText) {
  MultiPolytope p;
  p.fan = fan;
  p.c = parseVector(cText, "support parameters");
  requireValid(static_cast<int>(p.c.size()) == fan.m,
               "need one support parameter per vertex slot");
  return p;
}

Json vectorOfInts(const std::vector<long long>& v) { return Json(v); }

Json simplexList(const std::vector<std::vector<int>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(simplexToJson(s));
  return out;
}

// ---------------------------------------------------------------- commands

void runValidate(const std::string& path, const Options& opt) {
  MultiFan fan = fanFromJson(loadJsonFile(path));
  ValidationReport r = validate(fan);
  Json doc = report("validation");
  doc["valid"] = r.valid;
  doc["zero_fan"] = r.zeroFan;
  doc["complete"] = r.valid && isComplete(fan);
  Json ghosts = Json::array();
  for (int g : r.ghostVertices) ghosts.push_back(g + 1);
  doc["ghost_vertices"] = std::move(ghosts);
  doc["dependent_simplices"] = simplexList(r.dependentSimplices);
  doc["message"] = r.message;
  emitJson(doc, opt);
  requireValid(r.valid, r.message.empty() ? "fan is invalid" : r.message);
}

void runVolume(const std::string& path, const std::string& route, const Options& opt) {
  MultiFan fan = loadFan(path);
  Rng rng(opt.seed);
  Json doc = report("volume");
  doc["route"] = route;
  std::optional<HomogeneousForm> viaIndex, viaLawrence;
  if (route == "index" || route == "both") {
    viaIndex = volumePolyIndex(fan, rng).form;
    doc["index"] = formToJson(*viaIndex);
  }
  if (route == "lawrence" || route == "both") {
    viaLawrence = volumePolyLawrence(fan, randomGenericVector(fan, rng)).form;
    doc["lawrence"] = formToJson(*viaLawrence);
  }
  if (route == "both") {
    internalCheck(*viaIndex == *viaLawrence, "volume routes disagree");
    doc["routes_agree"] = true;
  }
  emitJson(doc, opt);
}

void runIntegrate(const std::string& path, const std::string& expText, const Options& opt) {
  MultiFan fan = loadFan(path);
  Exponents a = parseExponents(expText);
  requireValid(static_cast<int>(a.size()) == fan.m, "need one exponent per vertex slot");
  Rng rng(opt.seed);
  Json doc = report("integral");
  doc["exponents"] = a;
  doc["value"] = rationalToJson(integrateMonomial(fan, a, rng));
  emitJson(doc, opt);
}

void runDims(const std::string& path, const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(!fan.isZero(), "the zero fan carries no duality algebra");
  Rng rng(opt.seed);
  HomogeneousForm v = volumePolyIndex(fan, rng).form;
  requirePre(!v.isZero(), "volume polynomial is zero; no duality algebra");
  Json doc = report("dims");
  doc["dm"] = vectorOfInts(build(v).dims);
  emitJson(doc, opt);
}

void runStructure(const std::string& path, const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(!fan.isZero(), "the zero fan has no structure to verify");
  Rng rng(opt.seed);
  StructureReport r = verifyStructure(fan, rng);
  Json doc = report("structure");
  doc["theorem_case"] = r.theoremCase;
  doc["verified"] = r.verified;
  doc["dm"] = vectorOfInts(r.dm);
  doc["face_ring_dims"] = vectorOfInts(r.faceRingDims);
  doc["socle_defects"] = vectorOfInts(r.socleDefects);
  Json cls;
  cls["pure"] = r.classification.pure;
  cls["connected"] = r.classification.connected;
  cls["strongly_connected"] = r.classification.stronglyConnected;
  cls["pseudomanifold"] = r.classification.pseudomanifold;
  cls["orientable"] = r.classification.orientable;
  cls["gorenstein_star"] = r.classification.gorensteinStar;
  cls["homology_manifold"] = r.classification.homologyManifold;
  if (r.classification.fundamentalChain)
    cls["fundamental_chain"] = chainToJson(*r.classification.fundamentalChain);
  doc["classification"] = std::move(cls);
  Json comb;
  comb["n"] = r.combinatorics.n;
  comb["f"] = vectorOfInts(r.combinatorics.f);
  comb["h"] = vectorOfInts(r.combinatorics.h);
  comb["h_prime"] = vectorOfInts(r.combinatorics.hPrime);
  comb["h_double"] = vectorOfInts(r.combinatorics.hDouble);
  comb["betti"] = Json(r.combinatorics.betti);
  doc["combinatorics"] = std::move(comb);
  emitJson(doc, opt);
}

void runHvector(const std::string& path, const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(!fan.isZero(), "the zero fan has no support profile");
  CombinatorialProfile p = profile(fan.support());
  Json doc = report("hvector");
  doc["n"] = p.n;
  doc["f"] = vectorOfInts(p.f);
  doc["h"] = vectorOfInts(p.h);
  doc["h_prime"] = vectorOfInts(p.hPrime);
  doc["h_double"] = vectorOfInts(p.hDouble);
  doc["betti"] = Json(p.betti);
  emitJson(doc, opt);
}

void runDh(const std::string& path, const std::string& cText, const std::string& pointText,
           const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(isComplete(fan), "the DH function needs a complete fan");
  MultiPolytope p = polytopeWith(fan, cText);
  QVector u = parseVector(pointText, "evaluation point");
  requireValid(static_cast<int>(u.size()) == fan.n, "point dimension mismatch");
  Rng rng(opt.seed);
  DHValue value = dhEval(p, u, rng);
  Json doc = report("dh");
  doc["point"] = vectorToJson(value.point);
  doc["value"] = rationalToJson(value.value);
  Json cert = Json::array();
  for (const DHConeWitness& w : value.certificate) {
    Json entry;
    entry["simplex"] = simplexToJson(w.simplex);
    entry["positive_count"] = w.positiveCount;
    entry["member"] = w.member;
    cert.push_back(std::move(entry));
  }
  doc["certificate"] = std::move(cert);
  emitJson(doc, opt);
}

void runVertices(const std::string& path, const std::string& cText, const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(isComplete(fan), "vertices are defined for complete fans");
  MultiPolytope p = polytopeWith(fan, cText);
  Json doc = report("vertices");
  Json list = Json::array();
  for (const auto& facet : fan.supportedFacets()) {
    Json entry;
    entry["simplex"] = simplexToJson(facet);
    entry["point"] = vectorToJson(vertex(p, facet));
    list.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(list);
  emitJson(doc, opt);
}

Rational faceVolume(const MultiPolytope& p, const std::vector<int>& base, Rng& rng) {
  FacePolytope face = faceSupportParams(p, base);
  if (face.poly.fan.isZero()) return Rational(0);
  return evaluate(volumePolyIndex(face.poly.fan, rng).form, face.poly.c);
}

void runFaces(const std::string& path, const std::string& cText, const std::string& baseText,
              const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(isComplete(fan), "face data needs a complete fan");
  MultiPolytope p = polytopeWith(fan, cText);
  Rng rng(opt.seed);
  if (!baseText.empty()) {
    std::vector<int> base = parseIndexSet(baseText, "face simplex");
    FacePolytope face = faceSupportParams(p, base);
    Json doc = report("face");
    doc["base"] = simplexToJson(base);
    Json frame = Json::array();
    for (const QVector& row : face.projection.frameRows) frame.push_back(vectorToJson(row));
    doc["frame_rows"] = std::move(frame);
    doc["fan"] = fanToJson(face.poly.fan);
    doc["c"] = vectorToJson(face.poly.c);
    doc["volume"] = rationalToJson(
        face.poly.fan.isZero() ? Rational(0)
                               : evaluate(volumePolyIndex(face.poly.fan, rng).form, face.poly.c));
    emitJson(doc, opt);
    return;
  }
  // No simplex given: list every proper nonempty face with its volume
  // measured in the orthonormal-free frame coordinates of its projection.
  Json doc = report("faces");
  Json list = Json::array();
  SimplicialComplex support = fan.support();
  for (int k = 0; k + 1 < fan.n; ++k)
    for (const auto& base : support.faces(k)) {
      Json entry;
      entry["base"] = simplexToJson(base);
      entry["volume"] = rationalToJson(faceVolume(p, base, rng));
      list.push_back(std::move(entry));
    }
  doc["faces"] = std::move(list);
  emitJson(doc, opt);
}

void runMcvol(const std::string& path, const std::string& cText, const Options& opt) {
  MultiFan fan = loadFan(path);
  MultiPolytope p = polytopeWith(fan, cText);
  long long samples = opt.samplesOr(100000);
  McEstimate est = mcVolume(p, samples, opt.seed);
  Rng rng(opt.seed);
  Rational exact = evaluate(volumePolyIndex(fan, rng).form, p.c);
  Json doc = report("mcvol");
  doc["samples"] = est.samples;
  doc["seed"] = opt.seed;
  doc["estimate"] = est.estimate;
  doc["stderr"] = est.stderrEstimate;
  doc["exact"] = rationalToJson(exact);
  emitJson(doc, opt);
}

void runMinkowski(const std::string& path, const std::string& kind, const std::string& cText,
                  const std::string& cochainPath, const std::string& muText, const Options& opt) {
  MultiFan fan = loadFan(path);
  MultiPolytope p = polytopeWith(fan, cText);
  Rng rng(opt.seed);
  Json doc = report("minkowski");
  doc["kind"] = kind;
  if (kind == "facet") {
    QVector residual = minkowskiFacetCheck(p, rng);
    doc["residual"] = vectorToJson(residual);
    doc["is_zero"] = residual == QVector(fan.n, Rational(0));
  } else {
    requireValid(!cochainPath.empty() && !muText.empty(),
                 "cocycle check needs --cochain and --mu");
    Cochain a = chainFromJson(loadJsonFile(cochainPath));
    SkewForm mu = parseSkewForm(muText, fan.n);
    Rational value = minkowskiCocycleCheck(p, a, mu, rng);
    doc["value"] = rationalToJson(value);
    doc["is_zero"] = value == 0;
  }
  emitJson(doc, opt);
}

void runFlip(const std::string& path, const std::string& sText, int pArg,
             const std::string& newRayText, const Options& opt) {
  MultiFan fan = loadFan(path);
  std::vector<int> s = parseIndexSet(sText, "flip set");
  std::optional<QVector> newLambda;
  if (!newRayText.empty()) newLambda = parseVector(newRayText, "new ray");
  FlipResult result = flip(fan, s, pArg, newLambda);
  Json doc = fanToJson(result.fan);
  Json meta;
  meta["operation"] = "flip";
  meta["p"] = result.p;
  meta["q"] = result.q;
  meta["new_vertex"] = result.newVertex >= 0 ? Json(result.newVertex + 1) : Json(nullptr);
  doc["meta"] = std::move(meta);
  emitJson(doc, opt);
}

void runConsum(const std::string& pathA, const std::string& pathB, const std::string& baseAText,
               const std::string& baseBText, const Options& opt) {
  MultiFan a = loadFan(pathA);
  MultiFan b = loadFan(pathB);
  std::vector<int> baseA = parseIndexSet(baseAText, "base of the first fan");
  std::vector<int> baseB = parseIndexSet(baseBText, "base of the second fan");
  MultiFan sum = connectedSum(a, b, baseA, baseB);
  Json doc = fanToJson(sum);
  Json meta;
  meta["operation"] = "connected-sum";
  meta["base_a"] = simplexToJson(baseA);
  meta["base_b"] = simplexToJson(baseB);
  doc["meta"] = std::move(meta);
  emitJson(doc, opt);
}

void runRecognize(const std::string& path, bool reconstructWitness, const Options& opt) {
  HomogeneousForm psi = formFromJson(loadJsonFile(path));
  RecognitionVerdict verdict = isVolumePolynomial(psi);
  Json doc = report("recognition");
  doc["is_volume"] = verdict.isVolume;
  doc["ann_dimension"] = verdict.annDimension;
  doc["required"] = verdict.required;
  doc["dependent"] = simplexList(verdict.dependent.sets);
  doc["violations"] = simplexList(verdict.violations);
  if (reconstructWitness) {
    Rng rng(opt.seed);
    ReconstructionResult rec = reconstruct(psi, rng);
    doc["fan"] = fanToJson(rec.fan);
    doc["solution_space_dim"] = rec.solutionSpaceDim;
    doc["trials_used"] = rec.trialsUsed;
  }
  emitJson(doc, opt);
}

void runFromAlgebra(const std::string& path, const Options& opt) {
  TopFunctional f = functionalFromJson(loadJsonFile(path));
  Rng rng(opt.seed);
  FromAlgebraResult result = fromPoincareAlgebra(f, rng);
  Json doc = fanToJson(result.fan);
  Json meta;
  meta["operation"] = "from-algebra";
  meta["dm_input"] = vectorOfInts(result.dmInput);
  meta["dm_realized"] = vectorOfInts(result.dmRealized);
  meta["solution_space_dim"] = result.solutionSpaceDim;
  meta["psi"] = formToJson(result.psi);
  doc["meta"] = std::move(meta);
  emitJson(doc, opt);
}

void runRecoverLambda(const std::string& path, const std::string& facetText,
                      const std::string& raysText, const Options& opt) {
  HomogeneousForm psi = formFromJson(loadJsonFile(path));
  LambdaSeed seed;
  seed.facet = parseIndexSet(facetText, "seed facet");
  seed.rays = parseVectorList(raysText, "seed rays");
  Rng rng(opt.seed);
  MultiFan fan = recoverLambda(psi, seed, rng);
  Json doc = fanToJson(fan);
  Json meta;
  meta["operation"] = "recover-lambda";
  meta["seed_facet"] = simplexToJson(seed.facet);
  doc["meta"] = std::move(meta);
  emitJson(doc, opt);
}

void runPlotDh(const std::string& path, const std::string& cText, const Options& opt) {
  MultiFan fan = loadFan(path);
  MultiPolytope p = polytopeWith(fan, cText);
  emitText(emitSvg(p, opt.seed), opt);
}

// Resamples the rays of a fixed underlying chain and reports the spectrum of
// graded dimension vectors that occur. No claim is asserted either way.
void runRigidity(const std::string& path, const Options& opt) {
  MultiFan fan = loadFan(path);
  requirePre(!fan.isZero(), "the zero fan has nothing to resample");
  Rng rng(opt.seed);
  HomogeneousForm reference = volumePolyIndex(fan, rng).form;
  requirePre(!reference.isZero(), "volume polynomial is zero; no duality algebra");
  long long requested = opt.samplesOr(20);
  requireValid(requested > 0, "need a positive sample count");

  std::map<std::vector<long long>, long long> spectrum;
  long long used = 0, skipped = 0;
  for (long long i = 0; i < requested; ++i) {
    MultiFan candidate = fan;
    for (auto& row : candidate.lambda)
      for (auto& x : row) x = Rational(rng.uniformInt(-5, 5));
    if (!validate(candidate).valid) {
      ++skipped;
      continue;
    }
    HomogeneousForm v = volumePolyIndex(candidate, rng).form;
    if (v.isZero()) {
      ++skipped;
      continue;
    }
    ++used;
    ++spectrum[build(v).dims];
  }

  Json doc = report("rigidity");
  doc["samples"] = requested;
  doc["used"] = used;
  doc["skipped"] = skipped;
  doc["reference_dm"] = vectorOfInts(build(reference).dims);
  Json buckets = Json::array();
  for (const auto& [dm, count] : spectrum) {
    Json entry;
    entry["dm"] = vectorOfInts(dm);
    entry["count"] = count;
    buckets.push_back(std::move(entry));
  }
  doc["spectrum"] = std::move(buckets);
  doc["distinct"] = spectrum.size();
  emitJson(doc, opt);
}

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return 2;
    case ErrorKind::Precondition: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

const char* kindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

int reportError(ErrorKind kind, const std::string& message) {
  Json doc = report("error");
  doc["kind"] = kindName(kind);
  doc["message"] = message;
  std::cerr << doc.dump(2) << "\n";
  return exitCodeFor(kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact volume polynomials and duality algebras of simplicial multi-fans"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "random seed (default 0)")->capture_default_str();
  app.add_option("--samples", opt.samples, "sample count for the sampling commands");
  app.add_option("--out", opt.out, "write the primary output to this file instead of stdout");

  std::string input, route = "both", c, point, exponents, simplex, newRay, other, baseA, baseB;
  std::string kind = "facet", cochain, mu, facet, rays;
  int flipP = 1;
  bool reconstructWitness = false;

  auto* validateCmd = app.add_subcommand("validate", "check a fan document and report its shape");
  validateCmd->add_option("input", input, "fan JSON")->required();

  auto* volumeCmd = app.add_subcommand("volume", "volume polynomial of a complete fan");
  volumeCmd->add_option("input", input, "fan JSON")->required();
  volumeCmd->add_option("--route", route, "index, lawrence, or both")
      ->check(CLI::IsMember({"index", "lawrence", "both"}))
      ->capture_default_str();

  auto* integrateCmd = app.add_subcommand("integrate", "integral of a monomial over the fan");
  integrateCmd->add_option("input", input, "fan JSON")->required();
  integrateCmd->add_option("--exponents", exponents, "comma-separated exponents, one per slot")
      ->required();

  auto* dimsCmd = app.add_subcommand("dims", "graded dimensions of the duality algebra");
  dimsCmd->add_option("input", input, "fan JSON")->required();

  auto* structureCmd =
      app.add_subcommand("structure", "structure-theorem report for the support");
  structureCmd->add_option("input", input, "fan JSON")->required();

  auto* hvectorCmd = app.add_subcommand("hvector", "f/h/h'/h'' vectors of the support");
  hvectorCmd->add_option("input", input, "fan JSON")->required();

  auto* dhCmd = app.add_subcommand("dh", "Duistermaat-Heckman value at a point");
  dhCmd->add_option("input", input, "fan JSON")->required();
  dhCmd->add_option("--c", c, "support parameters, comma-separated")->required();
  dhCmd->add_option("--point", point, "evaluation point, comma-separated")->required();

  auto* verticesCmd = app.add_subcommand("vertices", "vertices of the multi-polytope");
  verticesCmd->add_option("input", input, "fan JSON")->required();
  verticesCmd->add_option("--c", c, "support parameters, comma-separated")->required();

  auto* facesCmd = app.add_subcommand("faces", "face polytopes and their volumes");
  facesCmd->add_option("input", input, "fan JSON")->required();
  facesCmd->add_option("--c", c, "support parameters, comma-separated")->required();
  facesCmd->add_option("--simplex", simplex, "detail one face (1-based vertex set)");

  auto* mcvolCmd = app.add_subcommand("mcvol", "Monte-Carlo volume against the exact value");
  mcvolCmd->add_option("input", input, "fan JSON")->required();
  mcvolCmd->add_option("--c", c, "support parameters, comma-separated")->required();

  auto* minkowskiCmd = app.add_subcommand("minkowski", "Minkowski relation checks");
  minkowskiCmd->add_option("input", input, "fan JSON")->required();
  minkowskiCmd->add_option("--c", c, "support parameters, comma-separated")->required();
  minkowskiCmd->add_option("--kind", kind, "facet or cocycle")
      ->check(CLI::IsMember({"facet", "cocycle"}))
      ->capture_default_str();
  minkowskiCmd->add_option("--cochain", cochain, "cochain JSON (cocycle kind)");
  minkowskiCmd->add_option("--mu", mu, "alternating form, e.g. \"1,2:1\" (cocycle kind)");

  auto* flipCmd = app.add_subcommand("flip", "bistellar-type surgery on n+1 rays");
  flipCmd->add_option("input", input, "fan JSON")->required();
  flipCmd->add_option("--simplex", simplex, "the n+1 rays (1-based; for p=1, the facet)")
      ->required();
  flipCmd->add_option("--p", flipP, "flip type (1 adds a ray)")->capture_default_str();
  flipCmd->add_option("--new-ray", newRay, "appended ray for p=1, comma-separated");

  auto* consumCmd = app.add_subcommand("consum", "connected sum along a shared facet");
  consumCmd->add_option("input", input, "first fan JSON")->required();
  consumCmd->add_option("--other", other, "second fan JSON")->required();
  consumCmd->add_option("--base-a", baseA, "facet of the first fan (1-based)")->required();
  consumCmd->add_option("--base-b", baseB, "matching facet of the second fan (1-based)")
      ->required();

  auto* recognizeCmd =
      app.add_subcommand("recognize", "test a polynomial for being a volume polynomial");
  recognizeCmd->add_option("input", input, "form JSON")->required();
  recognizeCmd->add_flag("--reconstruct", reconstructWitness, "also emit a witness fan");

  auto* fromAlgebraCmd =
      app.add_subcommand("from-algebra", "realize a degree-two Poincare duality algebra");
  fromAlgebraCmd->add_option("input", input, "functional JSON")->required();

  auto* recoverCmd =
      app.add_subcommand("recover-lambda", "rebuild a fan from its volume polynomial");
  recoverCmd->add_option("input", input, "form JSON")->required();
  recoverCmd->add_option("--facet", facet, "seed facet (1-based vertex set)")->required();
  recoverCmd->add_option("--rays", rays, "seed rays, e.g. \"1,0;0,1\"")->required();

  auto* plotCmd = app.add_subcommand("plot-dh", "SVG chart of DH chamber values (n=2)");
  plotCmd->add_option("input", input, "fan JSON")->required();
  plotCmd->add_option("--c", c, "support parameters, comma-separated")->required();

  auto* rigidityCmd = app.add_subcommand(
      "experiment-rigidity", "resample rays over a fixed chain and report the dm spectrum");
  rigidityCmd->add_option("input", input, "fan JSON")->required();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(validateCmd)) runValidate(input, opt);
    else if (app.got_subcommand(volumeCmd)) runVolume(input, route, opt);
    else if (app.got_subcommand(integrateCmd)) runIntegrate(input, exponents, opt);
    else if (app.got_subcommand(dimsCmd)) runDims(input, opt);
    else if (app.got_subcommand(structureCmd)) runStructure(input, opt);
    else if (app.got_subcommand(hvectorCmd)) runHvector(input, opt);
    else if (app.got_subcommand(dhCmd)) runDh(input, c, point, opt);
    else if (app.got_subcommand(verticesCmd)) runVertices(input, c, opt);
    else if (app.got_subcommand(facesCmd)) runFaces(input, c, simplex, opt);
    else if (app.got_subcommand(mcvolCmd)) runMcvol(input, c, opt);
    else if (app.got_subcommand(minkowskiCmd)) runMinkowski(input, kind, c, cochain, mu, opt);
    else if (app.got_subcommand(flipCmd)) runFlip(input, simplex, flipP, newRay, opt);
    else if (app.got_subcommand(consumCmd)) runConsum(input, other, baseA, baseB, opt);
    else if (app.got_subcommand(recognizeCmd)) runRecognize(input, reconstructWitness, opt);
    else if (app.got_subcommand(fromAlgebraCmd)) runFromAlgebra(input, opt);
    else if (app.got_subcommand(recoverCmd)) runRecoverLambda(input, facet, rays, opt);
    else if (app.got_subcommand(plotCmd)) runPlotDh(input, c, opt);
    else if (app.got_subcommand(rigidityCmd)) runRigidity(input, opt);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return reportError(ErrorKind::Validation, e.what());
  } catch (const Error& e) {
    return reportError(e.kind(), e.what());
  } catch (const std::exception& e) {
    return reportError(ErrorKind::Internal, e.what());
  }
  return 0;
}
