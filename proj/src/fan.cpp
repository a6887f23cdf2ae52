#include "multifan/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "multifan/errors.hpp"

namespace multifan {

namespace {

std::string simplexToString(const std::vector<int>& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

}  // namespace

int sortSign(std::vector<int> v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    size_t j = i;
    while (j > 0 && v[j - 1] > v[j]) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return sign;
}

Rational MultiFan::chainCoeff(const std::vector<int>& simplex) const {
  auto it = chain.find(simplex);
  return it == chain.end() ? Rational(0) : it->second;
}

Rational MultiFan::weight(const std::vector<int>& simplex) const {
  auto it = chain.find(simplex);
  if (it == chain.end()) return Rational(0);
  return it->second * sgn(detLambda(simplex));
}

Rational MultiFan::detLambda(const std::vector<int>& simplex) const {
  std::vector<QVector> rows;
  rows.reserve(simplex.size());
  for (int i : simplex) {
    requirePre(i >= 0 && i < m, "ray index out of range");
    rows.push_back(lambda[i]);
  }
  return det(QMatrix::fromRows(rows));
}

std::vector<std::vector<int>> MultiFan::supportedFacets() const {
  std::vector<std::vector<int>> out;
  out.reserve(chain.size());
  for (const auto& [simplex, coef] : chain) out.push_back(simplex);
  return out;
}

SimplicialComplex MultiFan::support() const { return SimplicialComplex(m, supportedFacets()); }

Chain MultiFan::underlyingChain() const {
  Chain ch;
  ch.degree = n - 1;
  for (const auto& [simplex, coef] : chain) ch.add(simplex, coef);
  return ch;
}

MultiFan fanFromWeights(int n, int m, std::vector<QVector> lambda,
                        const std::map<std::vector<int>, Rational>& weights) {
  MultiFan fan;
  fan.n = n;
  fan.m = m;
  fan.lambda = std::move(lambda);
  for (const auto& [simplex, w] : weights) {
    if (w == 0) continue;
    int s = sgn(fan.detLambda(simplex));
    requireValid(s != 0, "weighted simplex " + simplexToString(simplex) +
                             " has linearly dependent rays; its orientation is undefined");
    fan.chain[simplex] = w * s;
  }
  return fan;
}

ValidationReport validate(const MultiFan& fan) {
  ValidationReport report;
  std::ostringstream msg;
  auto fail = [&](const std::string& why) {
    report.valid = false;
    report.message = why;
    return report;
  };

  if (fan.n < 1) return fail("ambient dimension must be at least 1");
  if (fan.m < 0) return fail("vertex slot count must be nonnegative");
  if (static_cast<int>(fan.lambda.size()) != fan.m)
    return fail("expected one ray vector per vertex slot");
  for (int i = 0; i < fan.m; ++i)
    if (static_cast<int>(fan.lambda[i].size()) != fan.n)
      return fail("ray " + std::to_string(i) + " does not have " + std::to_string(fan.n) +
                  " coordinates");

  for (const auto& [simplex, coef] : fan.chain) {
    if (static_cast<int>(simplex.size()) != fan.n)
      return fail("weighted simplex " + simplexToString(simplex) + " is not a " +
                  std::to_string(fan.n) + "-subset");
    for (size_t t = 0; t < simplex.size(); ++t) {
      if (simplex[t] < 0 || simplex[t] >= fan.m)
        return fail("weighted simplex " + simplexToString(simplex) + " has a vertex out of range");
      if (t > 0 && simplex[t - 1] >= simplex[t])
        return fail("weighted simplex " + simplexToString(simplex) +
                    " is not sorted strictly increasing");
    }
    if (coef == 0)
      return fail("weighted simplex " + simplexToString(simplex) + " stores an explicit zero");
  }

  for (const auto& [simplex, coef] : fan.chain)
    if (fan.detLambda(simplex) == 0) report.dependentSimplices.push_back(simplex);
  if (!report.dependentSimplices.empty()) {
    msg << report.dependentSimplices.size()
        << " weighted simplex(es) have linearly dependent rays, first: "
        << simplexToString(report.dependentSimplices.front());
    return fail(msg.str());
  }

  report.valid = true;
  report.zeroFan = fan.chain.empty();
  report.ghostVertices = fan.support().ghostVertices();
  msg << "ok: " << fan.chain.size() << " weighted cone(s) on " << fan.m << " vertex slot(s), "
      << report.ghostVertices.size() << " ghost(s)";
  report.message = msg.str();
  return report;
}

void requireValidFan(const MultiFan& fan) {
  ValidationReport report = validate(fan);
  requireValid(report.valid, report.message);
}

bool isComplete(const MultiFan& fan) {
  requireValidFan(fan);
  return boundary(fan.underlyingChain()).isZero();
}

Rational degreeAt(const MultiFan& fan, const QVector& v) {
  requireValidFan(fan);
  requirePre(static_cast<int>(v.size()) == fan.n, "point dimension mismatch");
  Rational total = 0;
  for (const auto& [simplex, coef] : fan.chain) {
    std::vector<QVector> columns;
    for (int i : simplex) columns.push_back(fan.lambda[i]);
    auto alpha = solveLinear(QMatrix::fromRows(columns).transposed(), v);
    internalCheck(alpha.has_value(), "cone basis failed to solve");
    bool inside = true;
    for (const Rational& a : *alpha) {
      requirePre(a != 0, "point lies on a wall of cone " + simplexToString(simplex));
      if (a < 0) inside = false;
    }
    if (inside) total += fan.weight(simplex);
  }
  return total;
}

ProjectedMultiFan project(const MultiFan& fan, const std::vector<int>& base) {
  requireValidFan(fan);
  int k = static_cast<int>(base.size());
  requirePre(k < fan.n, "projection base must be a proper simplex");
  requirePre(std::is_sorted(base.begin(), base.end()) &&
                 std::adjacent_find(base.begin(), base.end()) == base.end(),
             "projection base must be sorted and duplicate-free");
  if (k == 0) {
    // Projecting along the empty face changes nothing; the frame is the
    // standard basis so ambient and frame coordinates coincide.
    ProjectedMultiFan proj;
    proj.frameRows.assign(fan.n, QVector(fan.n, Rational(0)));
    for (int t = 0; t < fan.n; ++t) proj.frameRows[t][t] = 1;
    proj.fan = fan;
    return proj;
  }
  SimplicialComplex support = fan.support();
  requirePre(support.contains(base), "projection base is not a face of the support");

  ProjectedMultiFan proj;
  proj.base = base;

  std::vector<QVector> baseRows;
  for (int i : base) baseRows.push_back(fan.lambda[i]);
  proj.frameRows = kernelBasis(QMatrix::fromRows(baseRows));
  internalCheck(static_cast<int>(proj.frameRows.size()) == fan.n - k,
                "orthogonal complement has wrong dimension");

  // Orient the frame so that (frame rows; base rays) is a positive basis.
  {
    std::vector<QVector> rows = proj.frameRows;
    for (const auto& r : baseRows) rows.push_back(r);
    Rational d = det(QMatrix::fromRows(rows));
    internalCheck(d != 0, "frame plus base rays must be a basis");
    if (d < 0)
      for (auto& x : proj.frameRows[0]) x = -x;
  }

  // Split lambda(j) = sum_t x_t b_t + sum_i y_i lambda(i) exactly; x are the
  // frame coordinates of the projected ray and y the base coefficients.
  std::vector<QVector> splitColumns = proj.frameRows;
  for (const auto& r : baseRows) splitColumns.push_back(r);
  QMatrix splitMatrix = QMatrix::fromRows(splitColumns).transposed();

  std::set<int> linkVertices;
  for (const auto& [simplex, coef] : fan.chain) {
    if (!std::includes(simplex.begin(), simplex.end(), base.begin(), base.end())) continue;
    for (int j : simplex)
      if (!std::binary_search(base.begin(), base.end(), j)) linkVertices.insert(j);
  }

  MultiFan out;
  out.n = fan.n - k;
  out.m = fan.m;
  out.lambda.assign(fan.m, QVector(out.n, Rational(0)));
  for (int j : linkVertices) {
    auto sol = solveLinear(splitMatrix, fan.lambda[j]);
    internalCheck(sol.has_value(), "ray split failed");
    out.lambda[j] = QVector(sol->begin(), sol->begin() + out.n);
    proj.pConstants[j] = QVector(sol->begin() + out.n, sol->end());
  }

  for (const auto& [simplex, coef] : fan.chain) {
    if (!std::includes(simplex.begin(), simplex.end(), base.begin(), base.end())) continue;
    std::vector<int> rest;
    for (int j : simplex)
      if (!std::binary_search(base.begin(), base.end(), j)) rest.push_back(j);
    std::vector<QVector> rows;
    for (int j : rest) rows.push_back(out.lambda[j]);
    int s = sgn(det(QMatrix::fromRows(rows)));
    internalCheck(s != 0, "projected rays of a supported cone must stay independent");
    out.chain[rest] = fan.weight(simplex) * s;
  }

  proj.fan = std::move(out);
  return proj;
}

QVector projectedLambdaInAmbient(const ProjectedMultiFan& proj, int j) {
  requirePre(j >= 0 && j < proj.fan.m, "ray index out of range");
  const QVector& coords = proj.fan.lambda[j];
  QVector out(proj.frameRows.empty() ? 0 : proj.frameRows[0].size(), Rational(0));
  for (size_t t = 0; t < proj.frameRows.size(); ++t) out = out + coords[t] * proj.frameRows[t];
  return out;
}

QVector pointToFrame(const ProjectedMultiFan& proj, const QVector& u) {
  // Pairing map, not a coordinate map: component t is <u, b_t>, so the
  // standard dot against frame coefficients equals the ambient pairing
  // against the lifted vector. The frame basis need not be orthonormal.
  QVector out;
  out.reserve(proj.frameRows.size());
  for (const auto& row : proj.frameRows) out.push_back(dot(row, u));
  return out;
}

MultiFan elementaryFan(const std::vector<QVector>& rays) {
  requirePre(!rays.empty(), "rays must be nonempty");
  int n = static_cast<int>(rays[0].size());
  requirePre(static_cast<int>(rays.size()) == n + 1, "expected n+1 rays in Q^n");
  for (const auto& r : rays)
    requirePre(static_cast<int>(r.size()) == n, "ray dimension mismatch");
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      requirePre(!(rays[i] == rays[j]), "repeated ray vector");

  MultiFan fan;
  fan.n = n;
  fan.m = n + 1;
  fan.lambda = rays;

  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> simplex;
    std::vector<QVector> rows;
    for (int i = 0; i <= n; ++i)
      if (i != skip) {
        simplex.push_back(i);
        rows.push_back(rays[i]);
      }
    requirePre(det(QMatrix::fromRows(rows)) != 0, "rays are not in general position");
    fan.chain[simplex] = (skip % 2 == 0) ? Rational(1) : Rational(-1);
  }

  // Normalize the global orientation so the lexicographically first facet
  // {0..n-1} carries cone multiplicity +1.
  std::vector<int> first(n);
  for (int i = 0; i < n; ++i) first[i] = i;
  Rational w = fan.weight(first);
  if (w < 0)
    for (auto& [simplex, coef] : fan.chain) coef = -coef;
  return fan;
}

MultiFan linearCombine(const std::vector<std::pair<Rational, MultiFan>>& terms) {
  requirePre(!terms.empty(), "need at least one term");
  const MultiFan& head = terms.front().second;
  MultiFan out;
  out.n = head.n;
  out.m = head.m;
  out.lambda = head.lambda;
  for (const auto& [coef, fan] : terms) {
    requirePre(fan.n == out.n && fan.m == out.m, "terms must share ambient shape");
    requirePre(fan.lambda == out.lambda, "terms must share ray vectors");
    if (coef == 0) continue;
    for (const auto& [simplex, c] : fan.chain) {
      Rational next = out.chainCoeff(simplex) + coef * c;
      if (next == 0)
        out.chain.erase(simplex);
      else
        out.chain[simplex] = next;
    }
  }
  return out;
}

MultiFan connectedSum(const MultiFan& a, const MultiFan& b, const std::vector<int>& baseA,
                      const std::vector<int>& baseB) {
  requireValidFan(a);
  requireValidFan(b);
  requirePre(a.n == b.n, "summands must share ambient dimension");
  int n = a.n;
  requirePre(static_cast<int>(baseA.size()) == n && static_cast<int>(baseB.size()) == n,
             "glue sets must be facets");
  std::vector<int> sortedA = baseA, sortedB = baseB;
  std::sort(sortedA.begin(), sortedA.end());
  std::sort(sortedB.begin(), sortedB.end());
  requirePre(a.chainCoeff(sortedA) != 0, "glue facet is not supported in the first summand");
  requirePre(b.chainCoeff(sortedB) != 0, "glue facet is not supported in the second summand");
  for (int t = 0; t < n; ++t)
    requirePre(a.lambda[baseA[t]] == b.lambda[baseB[t]],
               "ray vectors disagree at glued position " + std::to_string(t));

  // b's glued vertices map onto a's; the rest keep their relative order and
  // are appended after a's slots.
  std::vector<int> map(b.m, -1);
  for (int t = 0; t < n; ++t) map[baseB[t]] = baseA[t];
  MultiFan out;
  out.n = n;
  out.m = a.m;
  out.lambda = a.lambda;
  for (int j = 0; j < b.m; ++j)
    if (map[j] < 0) {
      map[j] = out.m++;
      out.lambda.push_back(b.lambda[j]);
    }

  out.chain = a.chain;
  for (const auto& [simplex, coef] : b.chain) {
    std::vector<int> mapped;
    for (int v : simplex) mapped.push_back(map[v]);
    int s = sortSign(mapped);
    internalCheck(s != 0, "vertex map collapsed a simplex");
    std::sort(mapped.begin(), mapped.end());
    Rational next = out.chainCoeff(mapped) + coef * s;
    if (next == 0)
      out.chain.erase(mapped);
    else
      out.chain[mapped] = next;
  }
  return out;
}

FlipResult flip(const MultiFan& fan, const std::vector<int>& s, int p,
                const std::optional<QVector>& newLambda) {
  requireValidFan(fan);
  int n = fan.n;
  requirePre(p >= 1 && p <= n, "flip type must have 1 <= p <= n");

  MultiFan extended = fan;
  std::vector<int> full = s;
  std::sort(full.begin(), full.end());
  requirePre(std::adjacent_find(full.begin(), full.end()) == full.end(),
             "flip set has repeated vertices");

  FlipResult result;
  if (p == 1) {
    requirePre(static_cast<int>(full.size()) == n, "a (1,n)-flip takes a supported facet");
    requirePre(fan.chainCoeff(full) != 0, "flip facet is not supported");
    requirePre(newLambda.has_value() && static_cast<int>(newLambda->size()) == n,
               "a (1,n)-flip needs a ray vector for the new vertex");
    result.newVertex = extended.m++;
    extended.lambda.push_back(*newLambda);
    full.push_back(result.newVertex);
  } else {
    requirePre(static_cast<int>(full.size()) == n + 1, "flip set must have n+1 vertices");
    requirePre(!newLambda.has_value(), "only a (1,n)-flip takes a new ray vector");
    for (int v : full) requirePre(v >= 0 && v < fan.m, "flip vertex out of range");
  }

  // General position of the n+1 rays, checked by building the elementary fan.
  std::vector<QVector> rays;
  for (int v : full) rays.push_back(extended.lambda[v]);
  MultiFan elem = elementaryFan(rays);

  // Census: the facets of the flip set that are currently supported determine
  // which side of the bistellar move we are on.
  std::vector<int> removed;  // s with full\{s} supported
  for (int t = 0; t <= n; ++t) {
    std::vector<int> facet;
    for (int u = 0; u <= n; ++u)
      if (u != t) facet.push_back(full[u]);
    if (extended.chainCoeff(facet) != 0) removed.push_back(full[t]);
  }
  requirePre(static_cast<int>(removed.size()) == p,
             "flip set induces " + std::to_string(removed.size()) +
                 " supported facet(s), expected " + std::to_string(p));
  if (p >= 2) {
    SimplicialComplex support = extended.support();
    requirePre(!support.contains(removed),
               "the co-side " + simplexToString(removed) + " is already a face of the support");
  }
  if (p == n) {
    // The lone surviving vertex must disappear entirely, so its star must lie
    // inside the flip set.
    int lone = -1;
    for (int v : full)
      if (!std::binary_search(removed.begin(), removed.end(), v)) lone = v;
    for (const auto& [simplex, coef] : extended.chain)
      if (std::binary_search(simplex.begin(), simplex.end(), lone))
        requirePre(std::includes(full.begin(), full.end(), simplex.begin(), simplex.end()),
                   "vertex " + std::to_string(lone) +
                       " has supported cones outside the flip set; its link is not a simplex "
                       "boundary");
  }

  // One scale t must clear every removed facet at once: chain + t*elem = 0 there.
  std::optional<Rational> scale;
  for (int v : removed) {
    std::vector<int> facet, local;
    for (int idx = 0; idx <= n; ++idx)
      if (full[idx] != v) {
        facet.push_back(full[idx]);
        local.push_back(idx);
      }
    Rational have = extended.chainCoeff(facet);
    Rational unit = elem.chainCoeff(local);
    internalCheck(unit != 0, "elementary fan must support every facet of the flip set");
    Rational t = -have / unit;
    if (!scale)
      scale = t;
    else
      requirePre(*scale == t, "weights around the flip set do not match a simplex boundary");
  }
  internalCheck(scale.has_value() && *scale != 0, "flip scale must be nonzero");

  // Embed the elementary fan chain into the ambient slots and add.
  MultiFan embedded;
  embedded.n = n;
  embedded.m = extended.m;
  embedded.lambda = extended.lambda;
  for (const auto& [local, coef] : elem.chain) {
    std::vector<int> global;
    for (int idx : local) global.push_back(full[idx]);
    embedded.chain[global] = coef;  // full is sorted, so global stays sorted
  }
  result.fan = linearCombine({{Rational(1), extended}, {*scale, embedded}});
  requireValidFan(result.fan);
  result.p = p;
  result.q = n + 1 - p;
  return result;
}

}  // namespace multifan
