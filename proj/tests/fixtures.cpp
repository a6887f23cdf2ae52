#include "fixtures.hpp"

#include <algorithm>

#include "multifan/errors.hpp"

namespace multifan::fixtures {

namespace {

QVector vec2(long long x, long long y) { return {Rational(x), Rational(y)}; }
QVector vec3(long long x, long long y, long long z) {
  return {Rational(x), Rational(y), Rational(z)};
}

MultiFan fanOverFundamentalCycle(int n, std::vector<QVector> lambda,
                                 const SimplicialComplex& k) {
  ClassifyReport report = classify(k);
  internalCheck(report.fundamentalChain.has_value(), "fixture complex must be orientable");
  MultiFan fan{n, k.m(), std::move(lambda), report.fundamentalChain->terms};
  requireValidFan(fan);
  return fan;
}

std::vector<std::vector<int>> subsetsOfSize(int m, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == size) {
      out.push_back(pick);
      return;
    }
    for (int i = next; i <= m - (size - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

MultiFan cp2() {
  std::map<std::vector<int>, Rational> w{
      {{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}};
  return fanFromWeights(2, 3, {vec2(1, 0), vec2(0, 1), vec2(-1, -1)}, w);
}

MultiFan crossPolytope(int n) {
  std::vector<QVector> lambda(2 * n, QVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    lambda[i][i] = 1;
    lambda[n + i][i] = -1;
  }
  std::map<std::vector<int>, Rational> w;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> simplex;
    for (int i = 0; i < n; ++i) simplex.push_back((mask >> i & 1) ? n + i : i);
    std::sort(simplex.begin(), simplex.end());
    w[simplex] = 1;
  }
  return fanFromWeights(n, 2 * n, lambda, w);
}

MultiFan square() { return crossPolytope(2); }
MultiFan octahedron() { return crossPolytope(3); }

MultiFan star() {
  std::map<std::vector<int>, Rational> w{
      {{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{0, 4}, 1}};
  return fanFromWeights(
      2, 5, {vec2(1, 0), vec2(-2, 1), vec2(1, -2), vec2(0, 1), vec2(-1, -1)}, w);
}

MultiFan torus() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  std::vector<QVector> lambda;
  for (long long i = 1; i <= 7; ++i) lambda.push_back(vec3(i, i * i, i * i * i));
  return fanOverFundamentalCycle(3, lambda, SimplicialComplex(7, facets));
}

MultiFan bipyramid() {
  std::vector<std::vector<int>> facets{{0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                       {0, 1, 4}, {0, 2, 4}, {1, 2, 4}};
  std::vector<QVector> lambda{vec3(1, 0, 0), vec3(0, 1, 0), vec3(-1, -1, 0),
                              vec3(0, 0, 1), vec3(1, 2, -1)};
  return fanOverFundamentalCycle(3, lambda, SimplicialComplex(5, facets));
}

SimplicialComplex icosahedron() {
  auto upper = [](int k) { return 1 + k % 5; };
  auto lower = [](int k) { return 6 + k % 5; };
  std::vector<std::vector<int>> facets;
  for (int k = 0; k < 5; ++k) {
    facets.push_back({0, upper(k), upper(k + 1)});
    facets.push_back({11, lower(k), lower(k + 1)});
    facets.push_back({upper(k), upper(k + 1), lower(k)});
    facets.push_back({lower(k), lower(k + 1), upper(k + 1)});
  }
  return SimplicialComplex(12, facets);
}

MultiFan icosahedronFan(Rng& rng) {
  SimplicialComplex k = icosahedron();
  ClassifyReport report = classify(k);
  internalCheck(report.fundamentalChain.has_value(), "icosahedron must be orientable");
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<QVector> lambda;
    for (int i = 0; i < 12; ++i)
      lambda.push_back(vec3(rng.uniformInt(-9, 9), rng.uniformInt(-9, 9),
                            rng.uniformInt(-9, 9)));
    MultiFan fan{3, 12, std::move(lambda), report.fundamentalChain->terms};
    if (validate(fan).valid) return fan;
  }
  throw Error(ErrorKind::Internal, "could not sample independent icosahedron rays");
}

MultiFan randomCompleteFan(Rng& rng, int n, int m) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<QVector> lambda;
    for (int i = 0; i < m; ++i) {
      QVector v(n, Rational(0));
      do {
        for (int j = 0; j < n; ++j) v[j] = rng.uniformInt(-5, 5);
      } while (isZeroVector(v));
      lambda.push_back(v);
    }
    MultiFan shape{n, m, lambda, {}};

    std::vector<std::vector<int>> columns;
    for (const std::vector<int>& simplex : subsetsOfSize(m, n))
      if (shape.detLambda(simplex) != 0) columns.push_back(simplex);
    if (columns.empty()) continue;

    // Boundary map from independent n-subsets to (n-1)-subsets; for n = 1 the
    // single row is the augmentation, so kernel vectors are complete fans.
    std::vector<std::vector<int>> ridges = subsetsOfSize(m, n - 1);
    QMatrix boundaryMap(ridges.size(), columns.size());
    for (size_t j = 0; j < columns.size(); ++j) {
      for (int drop = 0; drop < n; ++drop) {
        std::vector<int> face = columns[j];
        face.erase(face.begin() + drop);
        size_t r = std::lower_bound(ridges.begin(), ridges.end(), face) - ridges.begin();
        boundaryMap.at(r, j) = (drop % 2 == 0) ? 1 : -1;
      }
    }
    std::vector<QVector> cycles = kernelBasis(boundaryMap);
    if (cycles.empty()) continue;

    QVector combo(columns.size(), Rational(0));
    for (const QVector& cycle : cycles)
      combo = combo + Rational(rng.uniformInt(-3, 3)) * cycle;
    std::map<std::vector<int>, Rational> chain;
    for (size_t j = 0; j < columns.size(); ++j)
      if (combo[j] != 0) chain[columns[j]] = combo[j];
    if (chain.empty()) continue;

    MultiFan fan{n, m, lambda, chain};
    requireValidFan(fan);
    internalCheck(isComplete(fan), "cycle-space sample must be complete");
    return fan;
  }
  throw Error(ErrorKind::Internal, "could not sample a complete fan at this size");
}

MultiPolytope withConstants(const MultiFan& fan, const QVector& c) {
  return MultiPolytope{fan, c};
}

MultiPolytope unitConstants(const MultiFan& fan) {
  return MultiPolytope{fan, QVector(fan.m, Rational(1))};
}

std::vector<Cochain> closedNonExactOneCochains(const SimplicialComplex& k) {
  std::vector<std::vector<int>> vertices = k.faces(0);
  std::vector<std::vector<int>> edges = k.faces(1);
  std::vector<std::vector<int>> triangles = k.faces(2);
  auto edgeIndex = [&edges](const std::vector<int>& e) {
    return std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
  };

  // delta^1 columns: the coboundary of each edge indicator.
  QMatrix d1(triangles.size(), edges.size());
  for (size_t t = 0; t < triangles.size(); ++t)
    for (size_t drop = 0; drop < 3; ++drop) {
      std::vector<int> e = triangles[t];
      e.erase(e.begin() + drop);
      d1.at(t, edgeIndex(e)) = (drop % 2 == 0) ? 1 : -1;
    }
  // delta^0 columns: coboundaries of vertex indicators.
  QMatrix d0(edges.size(), vertices.size());
  for (size_t e = 0; e < edges.size(); ++e)
    for (size_t v = 0; v < vertices.size(); ++v) {
      if (edges[e][0] == vertices[v][0]) d0.at(e, v) = -1;
      if (edges[e][1] == vertices[v][0]) d0.at(e, v) = 1;
    }

  std::vector<Cochain> out;
  QMatrix accumulated = d0;  // exact cochains plus those already selected
  for (const QVector& z : kernelBasis(d1)) {
    QMatrix extended(edges.size(), accumulated.cols() + 1);
    for (size_t r = 0; r < edges.size(); ++r) {
      for (size_t c = 0; c < accumulated.cols(); ++c) extended.at(r, c) = accumulated.at(r, c);
      extended.at(r, accumulated.cols()) = z[r];
    }
    if (rankOf(extended) == rankOf(accumulated)) continue;  // exact or dependent
    Cochain a = Cochain::zero(1);
    for (size_t e = 0; e < edges.size(); ++e)
      if (z[e] != 0) a.add(edges[e], z[e]);
    out.push_back(a);
    accumulated = extended;
  }
  return out;
}

}  // namespace multifan::fixtures
