#include "multifan/volume.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "multifan/errors.hpp"

namespace multifan {

namespace {

Rational intPow(const Rational& x, int e) {
  if (e == -1) {
    internalCheck(x != 0, "division by a zero cone coordinate");
    return Rational(1) / x;
  }
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

std::string indexSetToString(const std::vector<int>& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

// Per-cone data reused across many monomials at a fixed evaluation point.
struct ConeAtPoint {
  std::vector<int> simplex;
  QVector alpha;
  Rational ratio;  // chain(I) / det(lambda_I)
};

std::vector<ConeAtPoint> conesAt(const MultiFan& fan, const QVector& v) {
  std::vector<ConeAtPoint> out;
  out.reserve(fan.chain.size());
  for (const auto& [simplex, coef] : fan.chain) {
    ConeAtPoint cone;
    cone.simplex = simplex;
    cone.alpha = coneCoordinates(fan, simplex, v);
    for (const Rational& a : cone.alpha)
      requirePre(a != 0, "point lies on a wall of cone " + indexSetToString(simplex));
    cone.ratio = coef / fan.detLambda(simplex);
    out.push_back(std::move(cone));
  }
  return out;
}

Rational integralFromCones(const std::vector<ConeAtPoint>& cones, const Exponents& a) {
  std::vector<int> support = supportOf(a);
  Rational total = 0;
  for (const auto& cone : cones) {
    if (!std::includes(cone.simplex.begin(), cone.simplex.end(), support.begin(), support.end()))
      continue;
    Rational term = cone.ratio;
    for (size_t t = 0; t < cone.simplex.size(); ++t)
      term *= intPow(cone.alpha[t], a[cone.simplex[t]] - 1);
    total += term;
  }
  return total;
}

// A second certified-generic point, linearly independent from the first (for
// n = 1 merely distinct, which is as independent as one dimension allows).
QVector secondGenericVector(const MultiFan& fan, const QVector& v1, Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    QVector v2 = randomGenericVector(fan, rng);
    if (fan.n == 1) {
      if (!(v2 == v1)) return v2;
    } else if (rankOf(QMatrix::fromRows({v1, v2})) == 2) {
      return v2;
    }
  }
  throw Error(ErrorKind::Internal, "failed to sample an independent generic vector");
}

// Multi-indices of total degree n whose support lies on a face: enumerated
// cone by cone to avoid scanning all of [m]^n.
std::set<Exponents> supportedExponents(const MultiFan& fan) {
  std::set<Exponents> out;
  for (const auto& [simplex, coef] : fan.chain) {
    for (const Exponents& local : enumerateExponents(fan.n, fan.n)) {
      Exponents global(fan.m, 0);
      for (int t = 0; t < fan.n; ++t) global[simplex[t]] = local[t];
      out.insert(global);
    }
  }
  return out;
}

}  // namespace

bool isGenericPoint(const MultiFan& fan, const QVector& v) {
  if (static_cast<int>(v.size()) != fan.n) return false;
  for (const auto& [simplex, coef] : fan.chain)
    for (const Rational& a : coneCoordinates(fan, simplex, v))
      if (a == 0) return false;
  return true;
}

QVector coneCoordinates(const MultiFan& fan, const std::vector<int>& simplex, const QVector& v) {
  std::vector<QVector> rows;
  for (int i : simplex) rows.push_back(fan.lambda[i]);
  auto alpha = solveLinear(QMatrix::fromRows(rows).transposed(), v);
  requirePre(alpha.has_value(), "cone rays do not form a basis: " + indexSetToString(simplex));
  return *alpha;
}

QVector randomGenericVector(const MultiFan& fan, Rng& rng) {
  requireValidFan(fan);
  long long bound = 16LL * std::max(1, fan.m) * std::max(1, fan.n);
  for (int attempt = 0; attempt < 32; ++attempt) {
    QVector v(fan.n);
    for (int i = 0; i < fan.n; ++i) v[i] = Rational(rng.uniformInt(-bound, bound));
    if (!isZeroVector(v) && isGenericPoint(fan, v)) return v;
    bound *= 2;
  }
  throw Error(ErrorKind::Internal, "generic-vector search failed after 32 rounds");
}

Rational integrateMonomialAt(const MultiFan& fan, const Exponents& a, const QVector& v) {
  requireValidFan(fan);
  requirePre(static_cast<int>(a.size()) == fan.m, "multi-index length mismatch");
  requirePre(degreeOf(a) == fan.n, "multi-index degree must equal the ambient dimension");
  return integralFromCones(conesAt(fan, v), a);
}

Rational integrateMonomial(const MultiFan& fan, const Exponents& a, Rng& rng) {
  requirePre(isComplete(fan), "fan is not complete");
  QVector v1 = randomGenericVector(fan, rng);
  QVector v2 = secondGenericVector(fan, v1, rng);
  Rational r1 = integrateMonomialAt(fan, a, v1);
  Rational r2 = integrateMonomialAt(fan, a, v2);
  internalCheck(r1 == r2, "integral disagrees between two generic points");
  return r1;
}

VolumePolynomial volumePolyIndex(const MultiFan& fan, Rng& rng) {
  requirePre(isComplete(fan), "fan is not complete");
  VolumePolynomial out;
  out.route = "index";
  out.form = HomogeneousForm::zero(fan.m, fan.n);
  QVector v1 = randomGenericVector(fan, rng);
  out.genericPoint = v1;
  if (fan.isZero()) return out;

  QVector v2 = secondGenericVector(fan, v1, rng);
  auto cones1 = conesAt(fan, v1);
  auto cones2 = conesAt(fan, v2);
  for (const Exponents& a : supportedExponents(fan)) {
    Rational r1 = integralFromCones(cones1, a);
    Rational r2 = integralFromCones(cones2, a);
    internalCheck(r1 == r2, "integral disagrees between two generic points");
    out.form.addTerm(a, r1 / factorialProduct(a));
  }
  return out;
}

VolumePolynomial volumePolyLawrence(const MultiFan& fan, const QVector& v) {
  requirePre(isComplete(fan), "fan is not complete");
  requirePre(isGenericPoint(fan, v), "vector is not generic for this fan");
  VolumePolynomial out;
  out.route = "lawrence";
  out.genericPoint = v;
  HomogeneousForm total = HomogeneousForm::zero(fan.m, fan.n);
  for (const auto& cone : conesAt(fan, v)) {
    QVector coeffs(fan.m, Rational(0));
    Rational alphaProduct(1);
    for (size_t t = 0; t < cone.simplex.size(); ++t) {
      coeffs[cone.simplex[t]] = cone.alpha[t];
      alphaProduct *= cone.alpha[t];
    }
    total = total + (cone.ratio / alphaProduct) * power(HomogeneousForm::linear(coeffs), fan.n);
  }
  out.form = (Rational(1) / factorialOf(fan.n)) * total;
  return out;
}

HomogeneousForm derivative(const HomogeneousForm& volume, const std::vector<int>& J) {
  return applyDiffOp(DiffOp::squareFree(volume.m, J), volume);
}

Rational normalizedFaceVolume(const HomogeneousForm& volume, const QVector& c,
                              const std::vector<int>& J) {
  return evaluate(derivative(volume, J), c);
}

Rational normalizedFaceVolume(const MultiFan& fan, const QVector& c, const std::vector<int>& J,
                              Rng& rng) {
  return normalizedFaceVolume(volumePolyIndex(fan, rng).form, c, J);
}

HomogeneousForm chernPower(const HomogeneousForm& volume, const QVector& c, int k) {
  requirePre(k >= 0, "derivative order must be nonnegative");
  requirePre(static_cast<int>(c.size()) == volume.m, "support parameter length mismatch");
  HomogeneousForm out = volume;
  DiffOp pairing = DiffOp::pairing(c);
  for (int i = 0; i < k; ++i) out = applyDiffOp(pairing, out);
  return out;
}

MultiFan recoverLambda(const HomogeneousForm& psi, const LambdaSeed& seed, Rng& rng) {
  requirePre(!psi.isZero(), "the zero polynomial carries no fan data");
  int n = psi.degree;
  int m = psi.m;
  requirePre(n >= 1, "degree must be at least 1");

  // Support: facets are the n-subsets with nonvanishing square-free derivative.
  std::vector<std::vector<int>> facets;
  std::map<std::vector<int>, Rational> facetDerivative;
  std::vector<int> pick(n);
  auto scan = [&](auto&& self, int next, int depth) -> void {
    if (depth == n) {
      Rational value = derivative(psi, pick).coeff(Exponents(m, 0));
      if (value != 0) {
        facets.push_back(pick);
        facetDerivative[pick] = value;
      }
      return;
    }
    for (int i = next; i < m; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  scan(scan, 0, 0);
  requirePre(!facets.empty(), "no facet-level derivatives survive; nothing to recover");

  SimplicialComplex support(m, facets);
  ClassifyReport report = classify(support);
  requirePre(report.stronglyConnected && report.pseudomanifold && report.orientable,
             "support must be a strongly connected orientable pseudomanifold");

  // Seed shape.
  std::vector<int> start = seed.facet;
  requirePre(std::is_sorted(start.begin(), start.end()), "seed facet must be sorted");
  requirePre(facetDerivative.count(start) == 1, "seed facet is not in the recovered support");
  requirePre(static_cast<int>(seed.rays.size()) == n, "seed needs one ray per facet vertex");
  for (const auto& r : seed.rays)
    requirePre(static_cast<int>(r.size()) == n, "seed ray dimension mismatch");
  requirePre(det(QMatrix::fromRows(seed.rays)) != 0, "seed rays must form a basis");

  // Ridge adjacency.
  std::map<std::vector<int>, std::vector<std::vector<int>>> ridgeFacets;
  for (const auto& facet : facets)
    for (int skip = 0; skip < n; ++skip) {
      std::vector<int> ridge;
      for (int t = 0; t < n; ++t)
        if (t != skip) ridge.push_back(facet[t]);
      ridgeFacets[ridge].push_back(facet);
    }

  // Propagate rays across ridges: for the two facets J+{i1}, J+{i2} at a
  // ridge J, the vectors {lambda(x) : x in J+{i1,i2}} satisfy one linear
  // relation whose coefficients are the integrals of x_x * x_J, read off psi.
  auto relationCoeff = [&](const std::vector<int>& ridge, int x) {
    Exponents e(m, 0);
    for (int j : ridge) e[j] += 1;
    e[x] += 1;
    return psi.coeff(e) * factorialProduct(e);
  };

  std::map<int, QVector> rays;
  for (int t = 0; t < n; ++t) rays[start[t]] = seed.rays[t];
  std::set<std::vector<int>> visited{start};
  std::queue<std::vector<int>> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    std::vector<int> facet = frontier.front();
    frontier.pop();
    for (int skip = 0; skip < n; ++skip) {
      std::vector<int> ridge;
      for (int t = 0; t < n; ++t)
        if (t != skip) ridge.push_back(facet[t]);
      int i1 = facet[skip];
      for (const auto& other : ridgeFacets[ridge]) {
        if (other == facet) continue;
        int i2 = -1;
        for (int v : other)
          if (!std::binary_search(ridge.begin(), ridge.end(), v)) i2 = v;
        QVector sum(n, Rational(0));
        for (int j : ridge) sum = sum + relationCoeff(ridge, j) * rays.at(j);
        sum = sum + relationCoeff(ridge, i1) * rays.at(i1);
        Rational pivot = relationCoeff(ridge, i2);
        internalCheck(pivot != 0, "facet derivative vanished during propagation");
        QVector candidate = (Rational(-1) / pivot) * sum;
        auto it = rays.find(i2);
        if (it == rays.end()) {
          rays[i2] = candidate;
        } else {
          requirePre(it->second == candidate,
                     "inconsistent ray propagation; not a volume polynomial");
        }
        if (!visited.count(other)) {
          visited.insert(other);
          frontier.push(other);
        }
      }
    }
  }
  internalCheck(visited.size() == facets.size(), "strong connectivity must reach every facet");

  MultiFan fan;
  fan.n = n;
  fan.m = m;
  fan.lambda.assign(m, QVector(n, Rational(0)));
  for (const auto& [vertex, ray] : rays) fan.lambda[vertex] = ray;
  for (const auto& [facet, value] : facetDerivative) {
    Rational d = fan.detLambda(facet);
    requirePre(d != 0, "recovered rays are dependent on facet " + indexSetToString(facet));
    fan.chain[facet] = d * value;
  }

  requirePre(isComplete(fan), "recovered weights do not close up into a cycle");
  VolumePolynomial check = volumePolyIndex(fan, rng);
  requirePre(check.form == psi, "recovered fan does not reproduce the input polynomial");
  return fan;
}

}  // namespace multifan
