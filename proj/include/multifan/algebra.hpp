#pragma once

#include <string>
#include <vector>

#include "multifan/fan.hpp"
#include "multifan/forms.hpp"
#include "multifan/rng.hpp"
#include "multifan/simplicial.hpp"

namespace multifan {

/// A class of operator degree k, identified by its Macaulay-dual coordinates:
/// the form D(psi) of degree n-k. Two operators represent the same class
/// exactly when these forms are equal, so no normal forms are needed.
struct AlgebraClass {
  int degreeK = 0;
  HomogeneousForm dual;

  bool isZero() const { return dual.isZero(); }
  bool operator==(const AlgebraClass& other) const = default;
};

/// The graded quotient of the operator algebra by the annihilator of a
/// nonzero homogeneous form psi: per degree k it stores the lexicographic
/// monomial list, the dimension d_k, representative monomials (pivot rows),
/// and the pairing matrix between degrees k and n-k. Immutable after build.
struct DualityAlgebra {
  HomogeneousForm psi;
  int n = 0;
  int m = 0;
  std::vector<long long> dims;                      // d_0..d_n
  std::vector<std::vector<Exponents>> monomials;    // per degree: lex order
  std::vector<std::vector<int>> representatives;    // per degree: indices into monomials
  std::vector<QMatrix> pairingFull;                 // per k: monomials(k) x monomials(n-k)
  std::vector<QMatrix> pairingRep;                  // per k: d_k x d_{n-k}, invertible
};

/// Builds the quotient. The pairing entry at (b, b') is the full derivative
/// d^(b+b') psi = coeff(psi, b+b') * (b+b')!. Poincare duality (symmetric
/// dims, d_0 = d_n = 1, invertible representative pairings) is asserted.
DualityAlgebra build(const HomogeneousForm& psi);

AlgebraClass unitClass(const DualityAlgebra& a);
AlgebraClass classOf(const DualityAlgebra& a, const DiffOp& d);
/// A representative operator for the class, supported on degree-k monomials
/// with free coefficients set to zero (deterministic).
DiffOp operatorFor(const DualityAlgebra& a, const AlgebraClass& x);
/// Coordinates of the class over the degree-(n-k) monomial list: evaluations
/// d^b applied to the dual form.
QVector classCoordinates(const DualityAlgebra& a, const AlgebraClass& x);

/// Product via operator application to the dual form. Degrees beyond n give
/// the zero class.
AlgebraClass multiply(const DualityAlgebra& a, const AlgebraClass& x, const AlgebraClass& y);
/// The scalar D(psi) of a top-degree class.
Rational integrateTop(const DualityAlgebra& a, const AlgebraClass& x);

/// Rank of multiplication by omega^(n-2k) from degree k to degree n-k;
/// full rank d_k is the Lefschetz property at level k.
long long lefschetzRank(const DualityAlgebra& a, const AlgebraClass& omega, int k);

/// Rank at c of the derivative of the power map c -> class of d_c^(n-1):
/// the matrix (n-1)! * (d_i d_j psi)(c). Full rank d_1 certifies dominance
/// (generic surjectivity over the algebraic closure), not real surjectivity.
long long powerMapJacobianRank(const DualityAlgebra& a, const QVector& c);

/// Graded dimensions of the face ring modulo the linear system theta_1..theta_n
/// read off lambda: degree-j monomials supported on faces, modulo
/// theta * (degree j-1). Errors when lambda is dependent on some face.
std::vector<long long> srQuotientDims(const SimplicialComplex& k,
                                      const std::vector<QVector>& lambda, int n);

/// Structure-theorem cross-check for a complete fan: sphere supports must
/// have dm = h = face-ring dims; oriented connected homology manifolds must
/// have dm = h'', face-ring dims = h', and socle defects h'_j - h''_j =
/// C(n,j) * bettiTilde_{j-1}. Other supports are reported without assertions.
struct StructureReport {
  ClassifyReport classification;
  CombinatorialProfile combinatorics;
  std::vector<long long> dm;
  std::vector<long long> faceRingDims;
  std::vector<long long> socleDefects;  // h'_j - h''_j
  std::string theoremCase;              // "sphere", "manifold" or "none"
  bool verified = false;                // assertions ran and passed
};

StructureReport verifyStructure(const MultiFan& fan, Rng& rng);

}  // namespace multifan
