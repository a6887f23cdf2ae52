#pragma once

#include <cstdint>
#include <vector>

#include "multifan/fan.hpp"
#include "multifan/forms.hpp"
#include "multifan/rng.hpp"
#include "multifan/skew.hpp"
#include "multifan/volume.hpp"

namespace multifan {

/// A complete fan plus one support parameter per vertex slot: the i-th
/// hyperplane is <u, lambda(i)> = c_i. Every c is admissible.
struct MultiPolytope {
  MultiFan fan;
  QVector c;
};

/// The point where the hyperplanes of a supported cone meet.
QVector vertex(const MultiPolytope& p, const std::vector<int>& simplex);

struct DHConeWitness {
  std::vector<int> simplex;
  int positiveCount = 0;  // #{i in I : alpha_i > 0}; the cone's sign is (-1)^count
  bool member = false;    // sign(t_i) == sign(alpha_i) for every i in I
};

struct DHValue {
  QVector point;
  Rational value;
  std::vector<DHConeWitness> certificate;
};

/// Duistermaat-Heckman value at u: each weighted cone votes
/// (-1)^{positiveCount} * weight when u is a member, where t_i = <u,lambda(i)> - c_i
/// and alpha = coordinates of the auxiliary generic v in the cone basis.
/// Errors when u lies on a hyperplane (naming it) or v is non-generic.
DHValue dhEval(const MultiPolytope& p, const QVector& u, const QVector& v);
/// Same, sampling the auxiliary vector internally.
DHValue dhEval(const MultiPolytope& p, const QVector& u, Rng& rng);

/// Winding number of the boundary path around u (n = 2 only), by exact signed
/// ray-crossing counts. Each supported edge {i,j} contributes the two-leg path
/// foot(i) -> vertex(ij) -> foot(j), traversed with its chain coefficient;
/// completeness makes the union a closed 1-cycle. Fully independent of dhEval.
Rational windingOracle2D(const MultiPolytope& p, const QVector& u);

struct McEstimate {
  double estimate = 0.0;
  double stderrEstimate = 0.0;
  long long samples = 0;
};

/// Monte-Carlo volume oracle: uniform samples in the exact vertex bounding
/// box, averaging dhEval. The DH function vanishes outside the hull of the
/// vertices, so the box integral is the volume. Sums are accumulated as exact
/// rationals; floating point appears only in the final estimate/stderr.
/// Sampling is sharded with seeds derived from the master seed.
McEstimate mcVolume(const MultiPolytope& p, long long samples, std::uint64_t seed);

/// The face over a simplex of the support, as a polytope in the projected
/// fan: support parameters become c_i - sum_j p_{i,j} c_j. An empty simplex
/// returns the polytope itself over an identity projection.
struct FacePolytope {
  ProjectedMultiFan projection;
  MultiPolytope poly;
};

FacePolytope faceSupportParams(const MultiPolytope& p, const std::vector<int>& base);

/// sum_i (d_i V)(c) * lambda(i): the classical Minkowski relation; must be 0.
QVector minkowskiFacetCheck(const MultiPolytope& p, Rng& rng);

/// The operator sum_{|I|=k} a(I) * <wedge lambda(I), mu> * d_I attached to a
/// (k-1)-cochain and a rank-k alternating form.
DiffOp cocycleOperator(const MultiFan& fan, const Cochain& a, const SkewForm& mu);

/// Value of the cocycle operator applied to the volume polynomial, at c:
/// sum a(I) <lambda(I), mu> * (face volume / covol). Must be 0 whenever the
/// support is an oriented homology manifold and a is a coaugmented cocycle;
/// both hypotheses are checked.
Rational minkowskiCocycleCheck(const MultiPolytope& p, const Cochain& a, const SkewForm& mu,
                               Rng& rng);

}  // namespace multifan
