#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "multifan/linalg.hpp"

namespace multifan {

/// Abstract simplicial complex on vertex slots 0..m-1, stored by its maximal
/// faces. Vertices not covered by any facet are ghost slots: they keep their
/// index but carry no faces. The empty complex {} and the complex {{}} (just
/// the empty face) are both representable.
class SimplicialComplex {
public:
  SimplicialComplex() : m_(0) {}
  /// Canonicalizes: sorts faces, deduplicates, prunes non-maximal ones.
  SimplicialComplex(int m, std::vector<std::vector<int>> faces);

  int m() const { return m_; }
  const std::set<std::vector<int>>& facets() const { return facets_; }
  /// Dimension; -1 for {{}}, -2 for the void complex.
  int dim() const;
  bool isPure() const;
  bool isVoid() const { return facets_.empty(); }
  bool contains(const std::vector<int>& face) const;
  /// All k-dimensional faces ((k+1)-subsets), sorted. k = -1 gives {{}}.
  std::vector<std::vector<int>> faces(int k) const;
  /// All faces of every dimension including the empty face, sorted by
  /// (size, lexicographic).
  std::vector<std::vector<int>> allFaces() const;
  std::vector<int> vertices() const;
  std::vector<int> ghostVertices() const;

  /// Link of a face, on the same m vertex slots.
  SimplicialComplex link(const std::vector<int>& face) const;

  bool operator==(const SimplicialComplex& other) const = default;

private:
  int m_;
  std::set<std::vector<int>> facets_;
};

/// Formal Q-combination of k-dimensional simplices written in increasing
/// vertex order (the canonical orientation). Doubles as a cochain.
struct Chain {
  int degree = 0;  // simplex dimension
  std::map<std::vector<int>, Rational> terms;

  static Chain zero(int degree) { return {degree, {}}; }
  void add(const std::vector<int>& simplex, const Rational& coef);
  Rational coef(const std::vector<int>& simplex) const;
  bool isZero() const { return terms.empty(); }
  bool operator==(const Chain& other) const = default;
};

using Cochain = Chain;

Chain operator+(const Chain& a, const Chain& b);
Chain operator*(const Rational& s, const Chain& a);

/// Simplicial boundary in the full simplex on the ambient vertex set. A
/// degree-0 chain maps to the empty simplex with the augmentation value, so
/// closedness of 0-chains means total weight zero.
Chain boundary(const Chain& c);

/// Coboundary of a cochain within K (degree < dim K required).
Cochain coboundary(const SimplicialComplex& k, const Cochain& a);

/// Evaluation of a top-degree cochain against a chain (the coaugmentation).
Rational evaluateAgainst(const Cochain& a, const Chain& c);

/// Coaugmented cocycle test: standard coboundary below the top degree; in the
/// top degree, vanishing of the evaluation against the fundamental chain.
bool isCoaugmentedCocycle(const SimplicialComplex& k, const Cochain& a, const Chain& fundamental);

struct ReducedBetti {
  std::vector<int> b;  // b[j] = reduced Betti number in degree j, 0 <= j <= dim
  int bMinus1 = 0;     // 1 exactly for the empty complex {{}}
};

/// Reduced rational Betti numbers via exact boundary-matrix ranks.
ReducedBetti reducedBetti(const SimplicialComplex& k);

struct CombinatorialProfile {
  int n = 0;                      // dim + 1 of the pure complex
  std::vector<long long> f;       // f[j] = #(j-1)-faces, j = 0..n (f[0] = 1)
  std::vector<long long> h;       // h[0..n]
  std::vector<long long> hPrime;  // h'[0..n]
  std::vector<long long> hDouble; // h''[0..n]
  std::vector<int> betti;         // reduced Betti numbers, degrees 0..n-1
};

/// f/h/h'/h'' vectors of a pure complex; h' and h'' fold in the reduced Betti
/// numbers of the complex itself. Ghost vertices are not counted.
CombinatorialProfile profile(const SimplicialComplex& k);

struct ClassifyReport {
  bool pure = false;
  bool connected = false;
  bool stronglyConnected = false;
  bool pseudomanifold = false;
  bool orientable = false;
  bool gorensteinStar = false;
  bool homologyManifold = false;  // all non-empty face links are homology spheres
  std::optional<Chain> fundamentalChain;  // +-1 per facet, first facet +1
};

/// Homological classification over Q.
ClassifyReport classify(const SimplicialComplex& k);

}  // namespace multifan
