#include "multifan/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "multifan/errors.hpp"
#include "multifan/volume.hpp"

namespace multifan {

namespace {

QMatrix selectRows(const QMatrix& mat, const std::vector<int>& rows) {
  std::vector<QVector> picked;
  picked.reserve(rows.size());
  for (int r : rows) picked.push_back(mat.row(r));
  return QMatrix::fromRows(picked);
}

// Coordinates of a form over the lexicographic monomial list of its degree:
// entry b is d^b applied to the form, i.e. coeff * b!.
QVector formCoordinates(const HomogeneousForm& f, const std::vector<Exponents>& monomials) {
  QVector out;
  out.reserve(monomials.size());
  for (const Exponents& b : monomials) out.push_back(f.coeff(b) * factorialProduct(b));
  return out;
}

}  // namespace

DualityAlgebra build(const HomogeneousForm& psi) {
  requireValid(!psi.isZero(), "a duality algebra needs a nonzero homogeneous polynomial");
  DualityAlgebra a;
  a.psi = psi;
  a.n = psi.degree;
  a.m = psi.m;
  a.dims.resize(a.n + 1);
  a.monomials.resize(a.n + 1);
  a.representatives.resize(a.n + 1);
  a.pairingFull.resize(a.n + 1);
  a.pairingRep.resize(a.n + 1);

  for (int k = 0; k <= a.n; ++k) a.monomials[k] = enumerateExponents(a.m, k);

  for (int k = 0; k <= a.n; ++k) {
    const auto& rows = a.monomials[k];
    const auto& cols = a.monomials[a.n - k];
    std::vector<QVector> entries(rows.size(), QVector(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c) {
        Exponents e(a.m);
        for (int i = 0; i < a.m; ++i) e[i] = rows[r][i] + cols[c][i];
        entries[r][c] = psi.coeff(e) * factorialProduct(e);
      }
    a.pairingFull[k] = QMatrix::fromRows(entries);
    a.dims[k] = rankOf(a.pairingFull[k]);
    // Lex-first row basis: pivot columns of the transpose.
    auto pivots = rref(a.pairingFull[k].transposed()).pivotCols;
    a.representatives[k].assign(pivots.begin(), pivots.end());
  }

  // Poincare duality, asserted for every algebra ever built.
  internalCheck(a.dims[0] == 1 && a.dims[a.n] == 1, "duality algebra must have d_0 = d_n = 1");
  for (int k = 0; k <= a.n; ++k)
    internalCheck(a.dims[k] == a.dims[a.n - k], "graded dimensions must be symmetric");

  for (int k = 0; k <= a.n; ++k) {
    QMatrix sub = selectRows(a.pairingFull[k], a.representatives[k]);
    a.pairingRep[k] = sub.selectColumns(a.representatives[a.n - k]);
    internalCheck(rankOf(a.pairingRep[k]) == a.dims[k],
                  "representative pairing must be nondegenerate");
  }
  return a;
}

AlgebraClass unitClass(const DualityAlgebra& a) { return {0, a.psi}; }

AlgebraClass classOf(const DualityAlgebra& a, const DiffOp& d) {
  requirePre(d.ops.m == a.m, "operator arity mismatch");
  return {d.ops.degree, applyDiffOp(d, a.psi)};
}

DiffOp operatorFor(const DualityAlgebra& a, const AlgebraClass& x) {
  int k = x.degreeK;
  requirePre(k >= 0 && k <= a.n, "class degree out of range");
  const auto& unknowns = a.monomials[k];
  const auto& coords = a.monomials[a.n - k];
  std::vector<QVector> columns;
  columns.reserve(unknowns.size());
  for (const Exponents& b : unknowns)
    columns.push_back(formCoordinates(applyDiffOp(DiffOp::monomial(a.m, b), a.psi), coords));
  auto coeffs = solveLinear(QMatrix::fromRows(columns).transposed(), formCoordinates(x.dual, coords));
  requirePre(coeffs.has_value(), "not a class of this algebra");
  HomogeneousForm ops = HomogeneousForm::zero(a.m, k);
  for (size_t i = 0; i < unknowns.size(); ++i) ops.addTerm(unknowns[i], (*coeffs)[i]);
  return {ops};
}

QVector classCoordinates(const DualityAlgebra& a, const AlgebraClass& x) {
  requirePre(x.degreeK >= 0 && x.degreeK <= a.n, "class degree out of range");
  return formCoordinates(x.dual, a.monomials[a.n - x.degreeK]);
}

AlgebraClass multiply(const DualityAlgebra& a, const AlgebraClass& x, const AlgebraClass& y) {
  if (x.degreeK > a.n || y.degreeK > a.n)
    return {x.degreeK + y.degreeK, HomogeneousForm::zero(a.m, 0)};
  return {x.degreeK + y.degreeK, applyDiffOp(operatorFor(a, x), y.dual)};
}

Rational integrateTop(const DualityAlgebra& a, const AlgebraClass& x) {
  requirePre(x.degreeK == a.n, "integration takes a top-degree class");
  return x.dual.coeff(Exponents(a.m, 0));
}

long long lefschetzRank(const DualityAlgebra& a, const AlgebraClass& omega, int k) {
  requirePre(omega.degreeK == 1, "Lefschetz element must have operator degree 1");
  requirePre(k >= 0 && 2 * k <= a.n, "level must satisfy 2k <= n");
  DiffOp w = operatorFor(a, omega);
  std::vector<QVector> images;
  for (const Exponents& b : a.monomials[k]) {
    HomogeneousForm dual = applyDiffOp(DiffOp::monomial(a.m, b), a.psi);
    for (int i = 0; i < a.n - 2 * k; ++i) dual = applyDiffOp(w, dual);
    images.push_back(formCoordinates(dual, a.monomials[k]));
  }
  return rankOf(QMatrix::fromRows(images));
}

long long powerMapJacobianRank(const DualityAlgebra& a, const QVector& c) {
  requirePre(a.n >= 2, "the power map needs degree at least 2");
  requirePre(static_cast<int>(c.size()) == a.m, "sample point arity mismatch");
  internalCheck(a.dims[1] == a.dims[a.n - 1], "graded dimensions must be symmetric");
  Rational scale = factorialOf(a.n - 1);
  std::vector<QVector> rows(a.m, QVector(a.m));
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j <= i; ++j) {
      Exponents e(a.m, 0);
      e[i] += 1;
      e[j] += 1;
      Rational value = scale * evaluate(applyDiffOp(DiffOp::monomial(a.m, e), a.psi), c);
      rows[i][j] = value;
      rows[j][i] = value;
    }
  return rankOf(QMatrix::fromRows(rows));
}

std::vector<long long> srQuotientDims(const SimplicialComplex& k,
                                      const std::vector<QVector>& lambda, int n) {
  requirePre(static_cast<int>(lambda.size()) == k.m(), "one ray per vertex slot");
  for (const auto& l : lambda)
    requirePre(static_cast<int>(l.size()) == n, "ray dimension mismatch");
  for (const auto& facet : k.facets()) {
    std::vector<QVector> rows;
    for (int i : facet) rows.push_back(lambda[i]);
    requirePre(rankOf(QMatrix::fromRows(rows)) == static_cast<long long>(facet.size()),
               "rays are linearly dependent on a face; not a linear system of parameters");
  }

  std::vector<long long> dims(n + 1, 0);
  if (k.isVoid()) return dims;
  dims[0] = 1;

  std::vector<Exponents> prevBasis = {Exponents(k.m(), 0)};
  for (int j = 1; j <= n; ++j) {
    std::vector<Exponents> basis;
    std::map<Exponents, size_t> index;
    for (const Exponents& e : enumerateExponents(k.m(), j))
      if (k.contains(supportOf(e))) {
        index[e] = basis.size();
        basis.push_back(e);
      }
    std::vector<QVector> span;
    for (const Exponents& b : prevBasis)
      for (int t = 0; t < n; ++t) {
        QVector row(basis.size(), Rational(0));
        for (int i = 0; i < k.m(); ++i) {
          if (lambda[i][t] == 0) continue;
          Exponents e = b;
          e[i] += 1;
          auto it = index.find(e);
          if (it != index.end()) row[it->second] += lambda[i][t];
        }
        span.push_back(std::move(row));
      }
    long long rank = span.empty() || basis.empty() ? 0 : rankOf(QMatrix::fromRows(span));
    dims[j] = static_cast<long long>(basis.size()) - rank;
    prevBasis = std::move(basis);
  }
  return dims;
}

StructureReport verifyStructure(const MultiFan& fan, Rng& rng) {
  requirePre(isComplete(fan), "fan is not complete");
  requirePre(!fan.isZero(), "the zero fan has no duality algebra");

  StructureReport report;
  HomogeneousForm volume = volumePolyIndex(fan, rng).form;
  DualityAlgebra algebra = build(volume);
  report.dm = algebra.dims;

  SimplicialComplex support = fan.support();
  report.classification = classify(support);
  report.combinatorics = profile(support);
  report.faceRingDims = srQuotientDims(support, fan.lambda, fan.n);
  report.socleDefects.resize(fan.n + 1);
  for (int j = 0; j <= fan.n; ++j)
    report.socleDefects[j] = report.combinatorics.hPrime[j] - report.combinatorics.hDouble[j];

  const auto& cls = report.classification;
  if (cls.gorensteinStar) {
    report.theoremCase = "sphere";
    internalCheck(report.dm == report.combinatorics.h, "sphere case: dm must equal h");
    internalCheck(report.faceRingDims == report.combinatorics.h,
                  "sphere case: face-ring dims must equal h");
    report.verified = true;
  } else if (cls.homologyManifold && cls.orientable && cls.connected) {
    report.theoremCase = "manifold";
    internalCheck(report.dm == report.combinatorics.hDouble, "manifold case: dm must equal h''");
    internalCheck(report.faceRingDims == report.combinatorics.hPrime,
                  "manifold case: face-ring dims must equal h'");
    for (int j = 1; j < fan.n; ++j)
      internalCheck(report.socleDefects[j] ==
                        binomialOf(fan.n, j) * report.combinatorics.betti[j - 1],
                    "manifold case: socle defect must match the Betti correction");
    report.verified = true;
  } else {
    report.theoremCase = "none";
  }
  return report;
}

}  // namespace multifan
