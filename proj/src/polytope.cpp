#include "multifan/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "multifan/errors.hpp"

namespace multifan {

namespace {

std::string indexSetToString(const std::vector<int>& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

Rational cross2(const QVector& a, const QVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Signed count of crossings of segment a->b with the ray u + t*r, t > 0.
// Assumes neither endpoint lies on the ray's line.
int rayCrossing(const QVector& u, const QVector& r, const QVector& a, const QVector& b) {
  Rational d1 = cross2(r, a - u);
  Rational d2 = cross2(r, b - u);
  if (sgn(d1) == sgn(d2)) return 0;
  Rational denom = cross2(r, b - a);
  internalCheck(denom != 0, "crossing segment cannot be parallel to the ray");
  Rational t = cross2(a - u, b - a) / denom;
  if (t <= 0) return 0;
  return sgn(denom);
}

}  // namespace

QVector vertex(const MultiPolytope& p, const std::vector<int>& simplex) {
  requireValidFan(p.fan);
  requirePre(static_cast<int>(p.c.size()) == p.fan.m, "one support parameter per vertex slot");
  requirePre(p.fan.chainCoeff(simplex) != 0,
             "simplex " + indexSetToString(simplex) + " is not a supported cone");
  std::vector<QVector> rows;
  QVector rhs;
  for (int i : simplex) {
    rows.push_back(p.fan.lambda[i]);
    rhs.push_back(p.c[i]);
  }
  auto u = solveLinear(QMatrix::fromRows(rows), rhs);
  internalCheck(u.has_value(), "supported cone rays must form a basis");
  return *u;
}

DHValue dhEval(const MultiPolytope& p, const QVector& u, const QVector& v) {
  requireValidFan(p.fan);
  requirePre(static_cast<int>(p.c.size()) == p.fan.m, "one support parameter per vertex slot");
  requirePre(static_cast<int>(u.size()) == p.fan.n, "point dimension mismatch");
  requirePre(isGenericPoint(p.fan, v), "auxiliary vector is not generic for this fan");

  SimplicialComplex support = p.fan.support();
  std::map<int, Rational> t;
  for (int i : support.vertices()) {
    t[i] = dot(u, p.fan.lambda[i]) - p.c[i];
    requirePre(t[i] != 0,
               "point lies on the hyperplane of ray index " + std::to_string(i) + " (0-based)");
  }

  DHValue out;
  out.point = u;
  out.value = 0;
  for (const auto& [simplex, coef] : p.fan.chain) {
    DHConeWitness witness;
    witness.simplex = simplex;
    QVector alpha = coneCoordinates(p.fan, simplex, v);
    witness.member = true;
    for (size_t k = 0; k < simplex.size(); ++k) {
      if (alpha[k] > 0) ++witness.positiveCount;
      if (sgn(alpha[k]) != sgn(t[simplex[k]])) witness.member = false;
    }
    if (witness.member) {
      Rational sign = (witness.positiveCount % 2 == 0) ? Rational(1) : Rational(-1);
      out.value += sign * p.fan.weight(simplex);
    }
    out.certificate.push_back(std::move(witness));
  }
  return out;
}

DHValue dhEval(const MultiPolytope& p, const QVector& u, Rng& rng) {
  return dhEval(p, u, randomGenericVector(p.fan, rng));
}

Rational windingOracle2D(const MultiPolytope& p, const QVector& u) {
  requireValidFan(p.fan);
  requirePre(p.fan.n == 2, "winding numbers are two-dimensional");
  requirePre(static_cast<int>(p.c.size()) == p.fan.m, "one support parameter per vertex slot");
  requirePre(static_cast<int>(u.size()) == 2, "point dimension mismatch");

  // Boundary 1-cycle: per supported edge {i<j} the path foot(i) -> vertex ->
  // foot(j) with multiplicity chain({i,j}). foot(i) lies on hyperplane i, so
  // the cycle's homotopy class does not depend on the foot choice, and u off
  // all hyperplanes never touches the path.
  SimplicialComplex support = p.fan.support();
  for (int i : support.vertices())
    requirePre(dot(u, p.fan.lambda[i]) != p.c[i],
               "point lies on the hyperplane of ray index " + std::to_string(i) + " (0-based)");

  std::map<int, QVector> foot;
  for (int i : support.vertices()) {
    const QVector& l = p.fan.lambda[i];
    foot[i] = (p.c[i] / dot(l, l)) * l;
  }

  struct Leg {
    QVector a, b;
    Rational mult;
  };
  std::vector<Leg> legs;
  std::vector<QVector> waypoints;
  for (const auto& [simplex, coef] : p.fan.chain) {
    QVector corner = vertex(p, simplex);
    legs.push_back({foot[simplex[0]], corner, coef});
    legs.push_back({corner, foot[simplex[1]], coef});
    waypoints.push_back(corner);
  }
  for (const auto& [i, f] : foot) waypoints.push_back(f);

  // Deterministic ray direction that misses every waypoint.
  QVector r;
  for (long long k = 0;; ++k) {
    r = {Rational(1), Rational(k)};
    bool clean = true;
    for (const auto& w : waypoints)
      if (!(w == u) && cross2(r, w - u) == 0) clean = false;
    if (clean) break;
    internalCheck(k < 4 * static_cast<long long>(waypoints.size()) + 4,
                  "ray direction search exhausted");
  }

  Rational winding = 0;
  for (const auto& leg : legs)
    winding += leg.mult * rayCrossing(u, r, leg.a, leg.b);
  return winding;
}

McEstimate mcVolume(const MultiPolytope& p, long long samples, std::uint64_t seed) {
  requirePre(isComplete(p.fan), "fan is not complete");
  requirePre(samples > 0, "need a positive sample count");
  McEstimate out;
  out.samples = samples;
  if (p.fan.isZero()) return out;

  QVector lo(p.fan.n), hi(p.fan.n);
  bool first = true;
  for (const auto& [simplex, coef] : p.fan.chain) {
    QVector u = vertex(p, simplex);
    for (int d = 0; d < p.fan.n; ++d) {
      if (first || u[d] < lo[d]) lo[d] = u[d];
      if (first || u[d] > hi[d]) hi[d] = u[d];
    }
    first = false;
  }
  Rational boxVolume = 1;
  for (int d = 0; d < p.fan.n; ++d) boxVolume *= hi[d] - lo[d];
  if (boxVolume == 0) return out;  // flat box: the DH function integrates to 0

  Rng auxRng(Rng::deriveSeed(seed, 0xA0A0A0A0ULL));
  QVector v = randomGenericVector(p.fan, auxRng);

  // Shards with derived seeds keep the stream layout stable if sharding ever
  // runs in parallel.
  const int shards = 16;
  Rational sum = 0, sumSquares = 0;
  long long done = 0;
  for (int shard = 0; shard < shards; ++shard) {
    long long quota = samples / shards + (shard < samples % shards ? 1 : 0);
    Rng rng(Rng::deriveSeed(seed, static_cast<std::uint64_t>(shard)));
    for (long long s = 0; s < quota;) {
      QVector u(p.fan.n);
      for (int d = 0; d < p.fan.n; ++d) u[d] = rng.uniformRational(lo[d], hi[d]);
      try {
        Rational value = dhEval(p, u, v).value;
        sum += value;
        sumSquares += value * value;
        ++s;
        ++done;
      } catch (const Error&) {
        // landed exactly on a hyperplane (measure zero on the sample grid);
        // draw a fresh point
      }
    }
  }
  internalCheck(done == samples, "sample count mismatch");

  Rational mean = sum / samples;
  Rational variance = sumSquares / samples - mean * mean;
  if (variance < 0) variance = 0;  // exact arithmetic: only possible at 0
  out.estimate = toDouble(boxVolume * mean);
  out.stderrEstimate = toDouble(boxVolume) * std::sqrt(toDouble(variance / samples));
  return out;
}

FacePolytope faceSupportParams(const MultiPolytope& p, const std::vector<int>& base) {
  requireValidFan(p.fan);
  requirePre(static_cast<int>(p.c.size()) == p.fan.m, "one support parameter per vertex slot");
  FacePolytope out;
  if (base.empty()) {
    // Identity projection: the polytope is its own codimension-0 face.
    out.projection.base = {};
    QMatrix eye = QMatrix::identity(p.fan.n);
    for (int t = 0; t < p.fan.n; ++t) out.projection.frameRows.push_back(eye.row(t));
    out.projection.fan = p.fan;
    out.poly = p;
    return out;
  }
  out.projection = project(p.fan, base);
  QVector c(p.fan.m, Rational(0));
  for (const auto& [j, pConst] : out.projection.pConstants) {
    c[j] = p.c[j];
    for (size_t t = 0; t < base.size(); ++t) c[j] -= pConst[t] * p.c[base[t]];
  }
  out.poly.fan = out.projection.fan;
  out.poly.c = std::move(c);
  return out;
}

QVector minkowskiFacetCheck(const MultiPolytope& p, Rng& rng) {
  requirePre(isComplete(p.fan), "fan is not complete");
  HomogeneousForm volume = volumePolyIndex(p.fan, rng).form;
  QVector residual(p.fan.n, Rational(0));
  for (int i = 0; i < p.fan.m; ++i) {
    Rational faceVolume = normalizedFaceVolume(volume, p.c, {i});
    residual = residual + faceVolume * p.fan.lambda[i];
  }
  return residual;
}

DiffOp cocycleOperator(const MultiFan& fan, const Cochain& a, const SkewForm& mu) {
  requirePre(mu.k == a.degree + 1, "alternating form rank must match the cochain degree");
  DiffOp op{HomogeneousForm::zero(fan.m, mu.k)};
  for (const auto& [simplex, value] : a.terms) {
    std::vector<QVector> vectors;
    for (int i : simplex) vectors.push_back(fan.lambda[i]);
    Rational pairing = pairSkew(wedge(vectors, fan.n), mu);
    if (pairing == 0 || value == 0) continue;
    op = op + (value * pairing) * DiffOp::squareFree(fan.m, simplex);
  }
  return op;
}

Rational minkowskiCocycleCheck(const MultiPolytope& p, const Cochain& a, const SkewForm& mu,
                               Rng& rng) {
  requirePre(isComplete(p.fan), "fan is not complete");
  int k = a.degree + 1;
  requirePre(k >= 1 && k <= p.fan.n, "cochain degree out of range");
  requirePre(mu.n == p.fan.n && mu.k == k, "alternating form shape mismatch");

  SimplicialComplex support = p.fan.support();
  ClassifyReport report = classify(support);
  requirePre(report.homologyManifold && report.orientable,
             "support must be an oriented homology manifold");
  internalCheck(report.fundamentalChain.has_value(), "orientable support carries a fundamental chain");
  requirePre(isCoaugmentedCocycle(support, a, *report.fundamentalChain),
             "cochain is not a coaugmented cocycle; the relation is not asserted");

  HomogeneousForm volume = volumePolyIndex(p.fan, rng).form;
  return evaluate(applyDiffOp(cocycleOperator(p.fan, a, mu), volume), p.c);
}

}  // namespace multifan
