#include "multifan/simplicial.hpp"

#include <algorithm>
#include <queue>

#include "multifan/errors.hpp"

namespace multifan {

namespace {

bool isSubset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void subsetsOfSize(const std::vector<int>& set, int k, std::set<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.insert(cur);
      return;
    }
    for (size_t i = start; i < set.size(); ++i) {
      cur.push_back(set[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<std::vector<int>> faces) : m_(m) {
  requireValid(m >= 0, "negative vertex count");
  std::set<std::vector<int>> cleaned;
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    requireValid(std::adjacent_find(f.begin(), f.end()) == f.end(), "face with repeated vertex");
    for (int v : f) requireValid(v >= 0 && v < m, "face vertex out of range");
    cleaned.insert(f);
  }
  for (const auto& f : cleaned) {
    bool maximal = true;
    for (const auto& g : cleaned)
      if (f != g && isSubset(f, g)) maximal = false;
    if (maximal) facets_.insert(f);
  }
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::isPure() const {
  if (facets_.empty()) return false;
  size_t sz = facets_.begin()->size();
  for (const auto& f : facets_)
    if (f.size() != sz) return false;
  return true;
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
  std::vector<int> s = face;
  std::sort(s.begin(), s.end());
  for (const auto& f : facets_)
    if (isSubset(s, f)) return true;
  return false;
}

std::vector<std::vector<int>> SimplicialComplex::faces(int k) const {
  std::set<std::vector<int>> out;
  if (k == -1) {
    if (!facets_.empty()) out.insert(std::vector<int>{});
  } else {
    for (const auto& f : facets_)
      if (static_cast<int>(f.size()) >= k + 1) subsetsOfSize(f, k + 1, out);
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> SimplicialComplex::allFaces() const {
  std::vector<std::vector<int>> out;
  for (int k = -1; k <= dim(); ++k)
    for (auto& f : faces(k)) out.push_back(std::move(f));
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::set<int> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

std::vector<int> SimplicialComplex::ghostVertices() const {
  std::set<int> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  std::vector<int> out;
  for (int v = 0; v < m_; ++v)
    if (!vs.count(v)) out.push_back(v);
  return out;
}

SimplicialComplex SimplicialComplex::link(const std::vector<int>& face) const {
  std::vector<int> s = face;
  std::sort(s.begin(), s.end());
  requirePre(contains(s), "link of a non-face");
  std::vector<std::vector<int>> lk;
  for (const auto& f : facets_) {
    if (!isSubset(s, f)) continue;
    std::vector<int> rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    lk.push_back(rest);
  }
  return SimplicialComplex(m_, lk);
}

void Chain::add(const std::vector<int>& simplex, const Rational& coef) {
  if (coef == 0) return;
  internalCheck(static_cast<int>(simplex.size()) == degree + 1, "chain degree mismatch");
  internalCheck(std::is_sorted(simplex.begin(), simplex.end()), "chain simplex must be sorted");
  auto it = terms.find(simplex);
  if (it == terms.end()) {
    terms.emplace(simplex, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

Rational Chain::coef(const std::vector<int>& simplex) const {
  auto it = terms.find(simplex);
  return it == terms.end() ? Rational(0) : it->second;
}

Chain operator+(const Chain& a, const Chain& b) {
  internalCheck(a.degree == b.degree || a.isZero() || b.isZero(), "chain degree mismatch");
  Chain r = a.isZero() ? b : a;
  if (a.isZero()) return r;
  for (const auto& [s, q] : b.terms) r.add(s, q);
  return r;
}

Chain operator*(const Rational& s, const Chain& a) {
  Chain r = Chain::zero(a.degree);
  for (const auto& [simplex, q] : a.terms) r.add(simplex, s * q);
  return r;
}

Chain boundary(const Chain& c) {
  Chain r = Chain::zero(c.degree - 1);
  for (const auto& [s, q] : c.terms) {
    for (size_t t = 0; t < s.size(); ++t) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<long>(t));
      r.add(face, (t % 2 == 0 ? q : -q));
    }
  }
  return r;
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& a) {
  requirePre(a.degree < k.dim(), "coboundary above the top degree");
  Cochain r = Cochain::zero(a.degree + 1);
  for (const auto& s : k.faces(a.degree + 1)) {
    Rational total = 0;
    for (size_t t = 0; t < s.size(); ++t) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<long>(t));
      total += (t % 2 == 0 ? Rational(1) : Rational(-1)) * a.coef(face);
    }
    r.add(s, total);
  }
  return r;
}

Rational evaluateAgainst(const Cochain& a, const Chain& c) {
  requirePre(a.degree == c.degree, "cochain/chain degree mismatch");
  Rational total = 0;
  for (const auto& [s, q] : c.terms) total += q * a.coef(s);
  return total;
}

bool isCoaugmentedCocycle(const SimplicialComplex& k, const Cochain& a, const Chain& fundamental) {
  if (a.degree < k.dim()) return coboundary(k, a).isZero();
  requirePre(a.degree == k.dim(), "cocycle degree above the top");
  return evaluateAgainst(a, fundamental) == 0;
}

ReducedBetti reducedBetti(const SimplicialComplex& k) {
  ReducedBetti out;
  if (k.isVoid()) return out;
  int d = k.dim();
  if (d == -1) {  // just the empty face: the (-1)-sphere
    out.bMinus1 = 1;
    return out;
  }
  // Augmented chain complex: ranks of boundary matrices degree by degree.
  std::vector<std::vector<std::vector<int>>> fcs(d + 1);
  std::vector<int> bdRank(d + 2, 0);  // bdRank[j] = rank of d_j : C_j -> C_{j-1}
  for (int j = 0; j <= d; ++j) fcs[j] = k.faces(j);
  bdRank[0] = fcs[0].empty() ? 0 : 1;  // augmentation
  for (int j = 1; j <= d; ++j) {
    if (fcs[j].empty()) continue;
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < fcs[j - 1].size(); ++i) index[fcs[j - 1][i]] = static_cast<int>(i);
    QMatrix mat(fcs[j - 1].size(), fcs[j].size());
    for (size_t cidx = 0; cidx < fcs[j].size(); ++cidx) {
      const auto& s = fcs[j][cidx];
      for (size_t t = 0; t < s.size(); ++t) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<long>(t));
        mat.at(index.at(face), cidx) = (t % 2 == 0 ? 1 : -1);
      }
    }
    bdRank[j] = rankOf(mat);
  }
  out.b.assign(d + 1, 0);
  for (int j = 0; j <= d; ++j)
    out.b[j] = static_cast<int>(fcs[j].size()) - bdRank[j] - bdRank[j + 1];
  out.bMinus1 = 1 - bdRank[0];
  return out;
}

CombinatorialProfile profile(const SimplicialComplex& k) {
  requirePre(k.isPure(), "profile requires a pure complex");
  CombinatorialProfile p;
  p.n = k.dim() + 1;
  int n = p.n;
  p.f.assign(n + 1, 0);
  p.f[0] = 1;
  for (int j = 1; j <= n; ++j) p.f[j] = static_cast<long long>(k.faces(j - 1).size());
  // sum_j h_j t^{n-j} = sum_j f_{j-1} (t-1)^{n-j}
  p.h.assign(n + 1, 0);
  for (int kk = 0; kk <= n; ++kk) {
    Rational hk = 0;
    for (int j = 0; j <= kk; ++j) {
      Rational c = binomialOf(n - j, kk - j);
      hk += ((kk - j) % 2 == 0 ? c : -c) * Rational(p.f[j]);
    }
    p.h[kk] = hk.convert_to<long long>();
  }
  ReducedBetti rb = reducedBetti(k);
  p.betti.assign(n, 0);
  for (int j = 0; j < n && j < static_cast<int>(rb.b.size()); ++j) p.betti[j] = rb.b[j];
  auto betti = [&](int j) -> long long {
    if (j < 0 || j >= n) return 0;
    return p.betti[j];
  };
  p.hPrime.assign(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    long long corr = 0;
    for (int s = 1; s <= j - 1; ++s) {
      long long term = binomialOf(n, j).convert_to<long long>() * betti(s - 1);
      corr += ((j - s - 1) % 2 == 0 ? term : -term);
    }
    p.hPrime[j] = p.h[j] + corr;
  }
  p.hDouble.assign(n + 1, 0);
  for (int j = 0; j < n; ++j)
    p.hDouble[j] = p.hPrime[j] - binomialOf(n, j).convert_to<long long>() * betti(j - 1);
  p.hDouble[n] = p.hPrime[n];
  return p;
}

namespace {

/// Links of every face (including the empty one) are homology spheres of the
/// complementary dimension. `includeEmpty` distinguishes the Gorenstein*
/// condition from the homology-manifold condition.
bool allLinksAreSpheres(const SimplicialComplex& k, bool includeEmpty) {
  int n = k.dim() + 1;
  for (const auto& face : k.allFaces()) {
    if (face.empty() && !includeEmpty) continue;
    SimplicialComplex lk = k.link(face);
    int expectedDim = n - 1 - static_cast<int>(face.size());
    if (lk.dim() != expectedDim) return false;
    ReducedBetti rb = reducedBetti(lk);
    if (expectedDim == -1) {
      if (rb.bMinus1 != 1) return false;
      continue;
    }
    if (rb.bMinus1 != 0) return false;
    for (int j = 0; j <= expectedDim; ++j)
      if (rb.b[j] != (j == expectedDim ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

ClassifyReport classify(const SimplicialComplex& k) {
  ClassifyReport r;
  r.pure = k.isPure();
  if (!r.pure) return r;
  ReducedBetti rb = reducedBetti(k);
  r.connected = (k.dim() == 0) ? k.faces(0).size() == 1 : (!rb.b.empty() && rb.b[0] == 0);

  std::vector<std::vector<int>> facets(k.facets().begin(), k.facets().end());
  int n = k.dim() + 1;

  // Ridge incidence: which facets contain each (n-2)-dimensional face.
  std::map<std::vector<int>, std::vector<int>> ridgeFacets;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    for (size_t t = 0; t < facets[fi].size(); ++t) {
      std::vector<int> ridge = facets[fi];
      ridge.erase(ridge.begin() + static_cast<long>(t));
      ridgeFacets[ridge].push_back(static_cast<int>(fi));
    }
  }

  // Strong connectivity of the facet adjacency graph.
  std::vector<int> comp(facets.size(), -1);
  std::queue<int> bfs;
  if (!facets.empty()) {
    comp[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop();
      for (const auto& [ridge, fs] : ridgeFacets) {
        bool hasCur = std::find(fs.begin(), fs.end(), cur) != fs.end();
        if (!hasCur) continue;
        for (int other : fs)
          if (comp[other] == -1) {
            comp[other] = 0;
            bfs.push(other);
          }
      }
    }
  }
  r.stronglyConnected = !facets.empty() &&
                        std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });

  bool ridgesTwice = true;
  for (const auto& [ridge, fs] : ridgeFacets)
    if (fs.size() != 2) ridgesTwice = false;
  r.pseudomanifold = n >= 1 && r.stronglyConnected && ridgesTwice;

  if (r.pseudomanifold) {
    // Orientation propagation across ridges; a facet (i1..in) flips sign against
    // its neighbor when the shared ridge sits at positions of equal parity.
    std::vector<int> orient(facets.size(), 0);
    orient[0] = 1;
    std::queue<int> q;
    q.push(0);
    bool consistent = true;
    while (!q.empty() && consistent) {
      int cur = q.front();
      q.pop();
      for (size_t t = 0; t < facets[cur].size(); ++t) {
        std::vector<int> ridge = facets[cur];
        ridge.erase(ridge.begin() + static_cast<long>(t));
        for (int other : ridgeFacets[ridge]) {
          if (other == cur) continue;
          // position of the vertex of `other` missing from the ridge
          size_t missing = 0;
          for (size_t j = 0; j < facets[other].size(); ++j)
            if (std::find(ridge.begin(), ridge.end(), facets[other][j]) == ridge.end()) missing = j;
          int rel = ((t + missing) % 2 == 0) ? -1 : 1;
          int want = rel * orient[cur];
          if (orient[other] == 0) {
            orient[other] = want;
            q.push(other);
          } else if (orient[other] != want) {
            consistent = false;
          }
        }
      }
    }
    int topBetti = rb.b.empty() ? 0 : rb.b[k.dim()];
    r.orientable = consistent;
    internalCheck(consistent == (topBetti == 1),
                  "orientation propagation disagrees with top homology rank");
    if (consistent) {
      Chain fc = Chain::zero(k.dim());
      for (size_t fi = 0; fi < facets.size(); ++fi) fc.add(facets[fi], Rational(orient[fi]));
      internalCheck(boundary(fc).isZero(), "fundamental chain is not a cycle");
      r.fundamentalChain = std::move(fc);
    }
  }

  r.gorensteinStar = allLinksAreSpheres(k, true);
  r.homologyManifold = allLinksAreSpheres(k, false);
  return r;
}

}  // namespace multifan
