#pragma once

#include <map>
#include <vector>

#include "multifan/algebra.hpp"
#include "multifan/fan.hpp"
#include "multifan/forms.hpp"
#include "multifan/rng.hpp"

namespace multifan {

/// The degree-1 operators annihilating psi, as coefficient vectors over
/// d_1..d_m.
struct AnnSquare {
  std::vector<QVector> basis;
  int dimension = 0;
};

AnnSquare annSquare(const HomogeneousForm& psi);

/// The subsets I with |I| <= maxSize on which the coordinate projection of
/// the row span of `basis` fails to be surjective (I-columns drop rank). The
/// complement family is closed under subsets.
struct DepSets {
  int m = 0;
  int maxSize = 0;
  std::vector<std::vector<int>> sets;

  bool contains(const std::vector<int>& s) const;
};

DepSets depSets(const std::vector<QVector>& basis, int m, int maxSize);

/// Volume-polynomial test: dim AnnSquare >= n, and the square-free derivative
/// d_I psi vanishes identically for every dependent I. The certificate lists
/// the annihilator dimension and any violating sets.
struct RecognitionVerdict {
  bool isVolume = false;
  int annDimension = 0;
  int required = 0;  // the degree n
  DepSets dependent;
  std::vector<std::vector<int>> violations;  // dependent I with d_I psi != 0
};

RecognitionVerdict isVolumePolynomial(const HomogeneousForm& psi);

/// A complete fan whose volume polynomial is exactly psi, built from a
/// sampled n-plane L inside the annihilator with dep(L) = dep(AnnSquare):
/// rays are the columns of a basis matrix of L, candidate cones are the
/// independent n-subsets, and the weights solve closedness plus coefficient
/// match in one linear system (free variables pinned to zero). The kernel
/// dimension of that system is reported.
struct ReconstructionResult {
  MultiFan fan;
  int solutionSpaceDim = 0;
  int trialsUsed = 0;
};

ReconstructionResult reconstruct(const HomogeneousForm& psi, Rng& rng);

/// A linear functional on the degree-n monomials in p generators; the data
/// defining a Poincare duality algebra generated in degree 2 when the
/// associated dual form has d_1 = p.
struct TopFunctional {
  int p = 0;
  int n = 0;
  std::map<Exponents, Rational> values;  // exponent vectors of length p, |e| = n

  /// The dual form sum values(b)/b! * y^b in p variables.
  HomogeneousForm dualForm() const;
};

/// Realizes the algebra of a functional as the algebra of a multi-fan: mixes
/// the p generators into m = p+n variables through a generic matrix (all
/// maximal minors nonzero), reconstructs a fan from the resulting pullback
/// polynomial, and certifies the realization by matching graded dimensions.
struct FromAlgebraResult {
  MultiFan fan;
  HomogeneousForm psi;                 // the pullback polynomial on m variables
  std::vector<long long> dmInput;      // algebra of the functional
  std::vector<long long> dmRealized;   // algebra of the fan's volume polynomial
  int solutionSpaceDim = 0;
};

FromAlgebraResult fromPoincareAlgebra(const TopFunctional& functional, Rng& rng);

}  // namespace multifan
