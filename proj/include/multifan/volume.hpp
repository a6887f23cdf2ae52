#pragma once

#include <string>
#include <vector>

#include "multifan/fan.hpp"
#include "multifan/forms.hpp"
#include "multifan/rng.hpp"

namespace multifan {

/// Degree-n form in the support parameters c_1..c_m whose value at c is the
/// volume of the multi-polytope (fan, c), plus provenance of the computation.
struct VolumePolynomial {
  HomogeneousForm form;
  std::string route;    // "index" or "lawrence"
  QVector genericPoint; // the certified generic vector used
};

/// True when v avoids every wall: expanding v in the ray basis of each
/// weighted cone gives only nonzero coordinates.
bool isGenericPoint(const MultiFan& fan, const QVector& v);

/// Coordinates of v in the basis {lambda(i) : i in simplex}.
QVector coneCoordinates(const MultiFan& fan, const std::vector<int>& simplex, const QVector& v);

/// Samples integer vectors with coordinates in [-B, B], B starting at 16*m*n,
/// doubling on failure (at most 32 rounds), until one passes isGenericPoint.
/// Exactness makes the genericity check a certificate, not a hope.
QVector randomGenericVector(const MultiFan& fan, Rng& rng);

/// The integral of x^a over the fan at one generic point: the weighted sum
/// over cones containing supp(a) of prod alpha_i^(a_i - 1), scaled per cone by
/// chain(I)/det(lambda_I). Exponent -1 means division; genericity keeps the
/// alpha nonzero.
Rational integrateMonomialAt(const MultiFan& fan, const Exponents& a, const QVector& v);

/// Integral of x^a with |a| = n over a complete fan, evaluated at two
/// independent generic points which must agree exactly (constancy
/// certificate).
Rational integrateMonomial(const MultiFan& fan, const Exponents& a, Rng& rng);

/// Volume polynomial via monomial integration: coeff of c^a is the integral
/// of x^a divided by prod a_i!, summed over multi-indices supported on faces.
VolumePolynomial volumePolyIndex(const MultiFan& fan, Rng& rng);

/// Volume polynomial via the cone-wise power expansion at one generic v:
/// (1/n!) sum_I chain(I)/(det lambda_I * prod alpha_j) * (sum_j alpha_j c_{i_j})^n.
VolumePolynomial volumePolyLawrence(const MultiFan& fan, const QVector& v);

/// Square-free partial derivative along the distinct vertices in J.
HomogeneousForm derivative(const HomogeneousForm& volume, const std::vector<int>& J);

/// Value of d_J(volume) at c: the J-face volume divided by covol(J).
Rational normalizedFaceVolume(const HomogeneousForm& volume, const QVector& c,
                              const std::vector<int>& J);
Rational normalizedFaceVolume(const MultiFan& fan, const QVector& c, const std::vector<int>& J,
                              Rng& rng);

/// k-fold application of the operator sum_i c_i d_i (numeric c). For a volume
/// polynomial and k = n the result is the constant n! * volume at c.
HomogeneousForm chernPower(const HomogeneousForm& volume, const QVector& c, int k);

/// Starting data for ray recovery: one facet with prescribed ray vectors.
struct LambdaSeed {
  std::vector<int> facet;      // sorted vertex indices, |facet| = deg(psi)
  std::vector<QVector> rays;   // rays for those vertices, a basis
};

/// Rebuilds a complete fan from its volume polynomial: the support is read
/// off the nonvanishing square-free derivatives, rays propagate across
/// adjacent facets through the linear relations hidden in the coefficients of
/// psi, and weights come from chain(I) = det(lambda_I) * d_I psi. Requires the
/// support to be a strongly connected orientable pseudomanifold; the result is
/// certified by recomputing its volume polynomial.
MultiFan recoverLambda(const HomogeneousForm& psi, const LambdaSeed& seed, Rng& rng);

}  // namespace multifan
