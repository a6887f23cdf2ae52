#pragma once

#include <map>
#include <string>
#include <vector>

#include "multifan/linalg.hpp"
#include "multifan/rational.hpp"

namespace multifan {

/// Exponent multi-index over variables 0..m-1 (entry i = exponent of x_i).
using Exponents = std::vector<int>;

int degreeOf(const Exponents& e);
std::vector<int> supportOf(const Exponents& e);   // sorted variable indices
Rational factorialProduct(const Exponents& e);    // prod_i e_i!

/// All multi-indices over m variables of total degree d, in ascending
/// lexicographic order of the exponent vector. Deterministic basis order for
/// every matrix built on monomials.
std::vector<Exponents> enumerateExponents(int m, int d);

/// Homogeneous polynomial of fixed degree in m variables, sparse over Q.
/// Invariants: every stored multi-index sums to `degree`; no stored zeros.
struct HomogeneousForm {
  int m = 0;
  int degree = 0;
  std::map<Exponents, Rational> terms;

  static HomogeneousForm zero(int m, int degree) { return {m, degree, {}}; }
  static HomogeneousForm monomial(int m, const Exponents& e, const Rational& coef);
  /// Linear form sum_i coeffs[i] * x_i.
  static HomogeneousForm linear(const QVector& coeffs);

  void addTerm(const Exponents& e, const Rational& coef);
  Rational coeff(const Exponents& e) const;
  bool isZero() const { return terms.empty(); }
  bool operator==(const HomogeneousForm& other) const;

  std::string toString(const std::string& var = "c") const;
};

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm operator*(const Rational& s, const HomogeneousForm& a);
HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm power(const HomogeneousForm& a, int k);

Rational evaluate(const HomogeneousForm& f, const QVector& point);

/// Sets the listed variables to zero (dropping all terms using them).
HomogeneousForm substituteZero(const HomogeneousForm& f, const std::vector<int>& vars);

/// Re-embeds f into mNew variables with variable i mapped to i + shift.
HomogeneousForm shiftVariables(const HomogeneousForm& f, int mNew, int shift);

/// Constant-coefficient differential operator: a homogeneous form in the
/// symbols d_0..d_{m-1}. Externally each d_i has degree 2; the `ops.degree`
/// field stores the polynomial degree k (external degree 2k).
struct DiffOp {
  HomogeneousForm ops;

  static DiffOp monomial(int m, const Exponents& e, const Rational& coef = Rational(1));
  static DiffOp variable(int m, int i);
  /// Square-free product prod_{i in J} d_i.
  static DiffOp squareFree(int m, const std::vector<int>& J);
  /// theta_j = sum_i lambda[i][j] d_i, the j-th linear system operator.
  static DiffOp theta(const std::vector<QVector>& lambda, int j);
  /// Support-parameter pairing sum_i c_i d_i.
  static DiffOp pairing(const QVector& c);

  bool isZero() const { return ops.isZero(); }
  bool operator==(const DiffOp& other) const = default;
};

/// Graded sum and scaling of operators (same rules as for forms).
DiffOp operator+(const DiffOp& a, const DiffOp& b);
DiffOp operator*(const Rational& s, const DiffOp& d);

/// d^b applied to c^a gives prod_i a_i!/(a_i-b_i)! * c^(a-b); extended
/// linearly. Over-differentiation yields the zero form.
HomogeneousForm applyDiffOp(const DiffOp& d, const HomogeneousForm& f);

}  // namespace multifan
