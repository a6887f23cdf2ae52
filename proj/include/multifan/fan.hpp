#pragma once

#include <map>
#include <optional>
#include <vector>

#include "multifan/linalg.hpp"
#include "multifan/simplicial.hpp"

namespace multifan {

/// Weighted simplicial multi-fan in Q^n: ray vectors lambda(0..m-1) plus a
/// weight for each supported n-subset of rays. Weights are stored as the
/// underlying-chain coefficients relative to increasing vertex order; the
/// cone multiplicity relative to the det-positive vertex order is recovered
/// by weight(). Ghost rays (never supported) are allowed and their lambda is
/// unconstrained. All operations treat the value as immutable.
struct MultiFan {
  int n = 0;
  int m = 0;
  std::vector<QVector> lambda;
  std::map<std::vector<int>, Rational> chain;  // sorted n-subsets -> chain coefficient

  /// Chain coefficient (increasing-order orientation); 0 when unsupported.
  Rational chainCoeff(const std::vector<int>& simplex) const;
  /// Cone multiplicity w(I) = chain(I) * sign(det lambda_I).
  Rational weight(const std::vector<int>& simplex) const;
  /// det of the rows lambda(i), i in the sorted simplex.
  Rational detLambda(const std::vector<int>& simplex) const;
  std::vector<std::vector<int>> supportedFacets() const;
  SimplicialComplex support() const;
  Chain underlyingChain() const;
  bool isZero() const { return chain.empty(); }
  bool operator==(const MultiFan& other) const = default;
};

/// Builds a fan from cone multiplicities (unordered weights); converts to the
/// chain convention via sign(det lambda_I).
MultiFan fanFromWeights(int n, int m, std::vector<QVector> lambda,
                        const std::map<std::vector<int>, Rational>& weights);

struct ValidationReport {
  bool valid = false;
  bool zeroFan = false;
  std::vector<std::vector<int>> dependentSimplices;  // star-condition violations
  std::vector<int> ghostVertices;
  std::string message;
};

/// Shape and star-condition check (independence of lambda on every supported
/// simplex). Does not throw; inspect `valid`.
ValidationReport validate(const MultiFan& fan);
/// Same checks, throwing ValidationError on failure.
void requireValidFan(const MultiFan& fan);

/// Complete <=> the underlying chain is a cycle (augmentation-closed for n=1).
bool isComplete(const MultiFan& fan);

/// Degree at a generic point: sum of cone multiplicities over the cones whose
/// interior contains v. Errors when v lies on a wall of some supported cone.
Rational degreeAt(const MultiFan& fan, const QVector& v);

/// Fan induced on the link of a simplex of the support, living in the
/// orthogonal complement of span{lambda(i) : i in base}. The complement is
/// carried as rational frame rows oriented so det(frame; lambda(base)) > 0
/// with the base rays in increasing order; iterated projection prepends the
/// later base ray, so composing in decreasing vertex order reproduces the
/// one-shot orientation (increasing order lands in the mirror class).
/// Projected lambda are frame coefficients and ambient points map in via
/// u |-> (<u, b_t>)_t, which makes the frame dot product agree with the
/// geometric pairing. Vertex slots are preserved: non-link rays become ghosts.
struct ProjectedMultiFan {
  std::vector<int> base;              // the projected-out simplex, sorted
  std::vector<QVector> frameRows;     // rational basis of the complement
  std::map<int, QVector> pConstants;  // j -> coefficients of proj_base lambda(j) over base
  MultiFan fan;                       // lives in frame coordinates
};

ProjectedMultiFan project(const MultiFan& fan, const std::vector<int>& base);

/// The projected ray as a vector back in the ambient space Q^n.
QVector projectedLambdaInAmbient(const ProjectedMultiFan& proj, int j);
/// Ambient point paired into the frame: component t is <u, frame row t>, so
/// dot(pointToFrame(u), x) == dot(u, lift of x) for frame coefficients x.
QVector pointToFrame(const ProjectedMultiFan& proj, const QVector& u);

/// Complete fan on n+1 rays in general position (boundary of a simplex),
/// weights the +-1 boundary pattern normalized so the lexicographically first
/// facet has cone multiplicity +1.
MultiFan elementaryFan(const std::vector<QVector>& rays);

/// Weighted sum of fans sharing n, m and lambda.
MultiFan linearCombine(const std::vector<std::pair<Rational, MultiFan>>& terms);

/// Connected sum along a common supported facet: the rays listed in baseA
/// (sorted) are identified with the rays listed in baseB (matched pointwise,
/// equal lambda required); the remaining rays of B are appended. Weights add
/// cone-wise.
MultiFan connectedSum(const MultiFan& a, const MultiFan& b, const std::vector<int>& baseA,
                      const std::vector<int>& baseB);

struct FlipResult {
  MultiFan fan;
  int p = 0;
  int q = 0;
  int newVertex = -1;  // the appended ray for p = 1
};

/// Bistellar-type surgery on a set S of n+1 rays in general position,
/// realized by adding a signed elementary fan on S. For p = 1, S is a
/// supported facet and newLambda supplies the appended ray. For p >= 2, S
/// must induce exactly the facets S\{s}, s in P, |P| = p, with P not a face,
/// and the weights around S must match a simplex boundary pattern.
FlipResult flip(const MultiFan& fan, const std::vector<int>& s, int p,
                const std::optional<QVector>& newLambda = std::nullopt);

/// Sign of the permutation sorting `v` ascending (0 on repeats).
int sortSign(std::vector<int> v);

}  // namespace multifan
