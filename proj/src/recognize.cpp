#include "multifan/recognize.hpp"

#include <algorithm>
#include <functional>

#include "multifan/errors.hpp"
#include "multifan/volume.hpp"

namespace multifan {

namespace {

void forEachSubset(int m, int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> pick(size);
  auto rec = [&](auto&& self, int next, int depth) -> void {
    if (depth == size) {
      visit(pick);
      return;
    }
    for (int i = next; i < m; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

AnnSquare annSquare(const HomogeneousForm& psi) {
  requirePre(!psi.isZero(), "the zero polynomial has no annihilator quotient");
  // Row i is d_i psi over the degree-(n-1) monomial basis; the kernel of the
  // transpose is the annihilator.
  std::vector<Exponents> coords = enumerateExponents(psi.m, std::max(psi.degree - 1, 0));
  std::vector<QVector> rows;
  for (int i = 0; i < psi.m; ++i) {
    HomogeneousForm di = applyDiffOp(DiffOp::variable(psi.m, i), psi);
    QVector row;
    row.reserve(coords.size());
    for (const Exponents& b : coords) row.push_back(di.coeff(b));
    rows.push_back(std::move(row));
  }
  AnnSquare out;
  out.basis = kernelBasis(QMatrix::fromRows(rows).transposed());
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

bool DepSets::contains(const std::vector<int>& s) const {
  return std::binary_search(sets.begin(), sets.end(), s);
}

DepSets depSets(const std::vector<QVector>& basis, int m, int maxSize) {
  DepSets out;
  out.m = m;
  out.maxSize = maxSize;
  QMatrix matrix = basis.empty() ? QMatrix::fromRows({QVector(m, Rational(0))})
                                 : QMatrix::fromRows(basis);
  for (int size = 1; size <= maxSize; ++size)
    forEachSubset(m, size, [&](const std::vector<int>& pick) {
      if (rankOf(matrix.selectColumns(pick)) < size) out.sets.push_back(pick);
    });
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

RecognitionVerdict isVolumePolynomial(const HomogeneousForm& psi) {
  requirePre(!psi.isZero(), "the zero polynomial is the volume of the zero fan; nothing to test");
  RecognitionVerdict verdict;
  verdict.required = psi.degree;
  AnnSquare ann = annSquare(psi);
  verdict.annDimension = ann.dimension;
  verdict.dependent = depSets(ann.basis, psi.m, psi.degree);
  for (const auto& dep : verdict.dependent.sets)
    if (!derivative(psi, dep).isZero()) verdict.violations.push_back(dep);
  verdict.isVolume = verdict.annDimension >= psi.degree && verdict.violations.empty();
  return verdict;
}

ReconstructionResult reconstruct(const HomogeneousForm& psi, Rng& rng) {
  RecognitionVerdict verdict = isVolumePolynomial(psi);
  requirePre(verdict.isVolume, "polynomial fails the volume-polynomial test");
  int n = psi.degree;
  int m = psi.m;
  AnnSquare ann = annSquare(psi);

  // Sample an n-plane L inside the annihilator with the same dependence sets;
  // each trial is verified exactly before use.
  ReconstructionResult result;
  QMatrix lambdaRows;  // n x m, columns are the rays
  bool found = false;
  for (int trial = 0; trial < 64 && !found; ++trial) {
    std::vector<QVector> combo(n, QVector(m, Rational(0)));
    for (int r = 0; r < n; ++r)
      for (int b = 0; b < ann.dimension; ++b) {
        Rational c(rng.uniformInt(-9, 9));
        for (int j = 0; j < m; ++j) combo[r][j] += c * ann.basis[b][j];
      }
    QMatrix candidate = QMatrix::fromRows(combo);
    result.trialsUsed = trial + 1;
    if (rankOf(candidate) != n) continue;
    if (!(depSets(combo, m, n).sets == verdict.dependent.sets)) continue;
    lambdaRows = candidate;
    found = true;
  }
  if (!found)
    throw Error(ErrorKind::Internal,
                "exhausted 64 trials sampling a generic plane inside the annihilator");

  MultiFan fan;
  fan.n = n;
  fan.m = m;
  for (int j = 0; j < m; ++j) fan.lambda.push_back(lambdaRows.col(j));

  // Candidate cones: independent n-subsets of rays.
  std::vector<std::vector<int>> candidates;
  forEachSubset(m, n, [&](const std::vector<int>& pick) {
    if (fan.detLambda(pick) != 0) candidates.push_back(pick);
  });
  requirePre(!candidates.empty(), "no independent ray subsets; nothing can carry weight");

  // One joint linear system: per-monomial coefficient match of
  // sum_I a(I) * T_I against psi at a generic point, plus closedness of the
  // chain (ridge sums zero). Consistency is guaranteed for certified psi.
  MultiFan probe = fan;  // all candidate cones weighted for genericity sampling
  for (const auto& c : candidates) probe.chain[c] = 1;
  QVector v = randomGenericVector(probe, rng);

  std::vector<Exponents> coords = enumerateExponents(m, n);
  std::map<Exponents, size_t> coordIndex;
  for (size_t i = 0; i < coords.size(); ++i) coordIndex[coords[i]] = i;
  std::map<std::vector<int>, size_t> ridgeIndex;
  for (const auto& cone : candidates)
    for (int skip = 0; skip < n; ++skip) {
      std::vector<int> ridge;
      for (int t = 0; t < n; ++t)
        if (t != skip) ridge.push_back(cone[t]);
      if (!ridgeIndex.count(ridge)) {
        size_t next = ridgeIndex.size();
        ridgeIndex[ridge] = next;
      }
    }

  size_t rows = coords.size() + ridgeIndex.size();
  std::vector<QVector> system(rows, QVector(candidates.size(), Rational(0)));
  QVector rhs(rows, Rational(0));
  for (size_t i = 0; i < coords.size(); ++i) rhs[i] = psi.coeff(coords[i]);

  for (size_t cIdx = 0; cIdx < candidates.size(); ++cIdx) {
    const auto& cone = candidates[cIdx];
    // T_I = (1/n!) (sum_j alpha_j c_{i_j})^n / (det * prod alpha): the cone's
    // contribution per unit chain coefficient.
    QVector alpha = coneCoordinates(fan, cone, v);
    QVector linear(m, Rational(0));
    Rational alphaProduct(1);
    for (int t = 0; t < n; ++t) {
      linear[cone[t]] = alpha[t];
      alphaProduct *= alpha[t];
    }
    Rational scale = Rational(1) / (factorialOf(n) * fan.detLambda(cone) * alphaProduct);
    HomogeneousForm contribution = scale * power(HomogeneousForm::linear(linear), n);
    for (const auto& [e, q] : contribution.terms) system[coordIndex.at(e)][cIdx] = q;
    // Closedness rows: boundary of the unit chain on this cone.
    Chain unit{n - 1, {{cone, Rational(1)}}};
    for (const auto& [face, coef] : boundary(unit).terms)
      system[coords.size() + ridgeIndex.at(face)][cIdx] = coef;
  }

  QMatrix a = QMatrix::fromRows(system);
  auto solution = solveLinear(a, rhs);
  internalCheck(solution.has_value(),
                "weight system inconsistent for a certified volume polynomial");
  result.solutionSpaceDim = static_cast<int>(candidates.size()) - static_cast<int>(rankOf(a));

  for (size_t cIdx = 0; cIdx < candidates.size(); ++cIdx)
    if ((*solution)[cIdx] != 0) fan.chain[candidates[cIdx]] = (*solution)[cIdx];
  requireValidFan(fan);
  internalCheck(isComplete(fan), "closedness rows must force a complete fan");
  internalCheck(volumePolyIndex(fan, rng).form == psi,
                "reconstructed fan must reproduce the input polynomial");
  result.fan = std::move(fan);
  return result;
}

HomogeneousForm TopFunctional::dualForm() const {
  HomogeneousForm out = HomogeneousForm::zero(p, n);
  for (const auto& [e, value] : values) {
    requireValid(static_cast<int>(e.size()) == p && degreeOf(e) == n,
                 "functional entries must be degree-n exponents over the generators");
    out.addTerm(e, value / factorialProduct(e));
  }
  return out;
}

FromAlgebraResult fromPoincareAlgebra(const TopFunctional& functional, Rng& rng) {
  requireValid(functional.p >= 1 && functional.n >= 1, "need p >= 1 generators and degree n >= 1");
  HomogeneousForm dual = functional.dualForm();
  requireValid(!dual.isZero(), "the zero functional defines no duality algebra");

  DualityAlgebra input = build(dual);
  requireValid(input.dims[1] == functional.p,
               "functional is not generated in degree 2: d_1 = " + std::to_string(input.dims[1]) +
                   " but p = " + std::to_string(functional.p));

  int p = functional.p;
  int n = functional.n;
  int m = p + n;
  for (int attempt = 0; attempt < 16; ++attempt) {
    // Mixing matrix G (m x p) with every maximal minor nonzero.
    std::vector<QVector> g(m, QVector(p));
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < p; ++t) g[i][t] = Rational(rng.uniformInt(-9, 9));
    bool generic = true;
    forEachSubset(m, p, [&](const std::vector<int>& pick) {
      std::vector<QVector> sub;
      for (int i : pick) sub.push_back(g[i]);
      if (det(QMatrix::fromRows(sub)) == 0) generic = false;
    });
    if (!generic) continue;

    // Pullback polynomial psi(c) = dual(G^T c) on m variables.
    HomogeneousForm psi = HomogeneousForm::zero(m, n);
    for (const auto& [b, coef] : dual.terms) {
      HomogeneousForm term = HomogeneousForm::monomial(m, Exponents(m, 0), coef);
      for (int t = 0; t < p; ++t) {
        QVector linear(m);
        for (int i = 0; i < m; ++i) linear[i] = g[i][t];
        term = term * power(HomogeneousForm::linear(linear), b[t]);
      }
      psi = psi + term;
    }
    if (psi.isZero()) continue;

    if (!isVolumePolynomial(psi).isVolume) continue;
    ReconstructionResult rec = reconstruct(psi, rng);
    DualityAlgebra realized = build(volumePolyIndex(rec.fan, rng).form);
    if (!(realized.dims == input.dims)) continue;

    FromAlgebraResult out;
    out.fan = std::move(rec.fan);
    out.psi = std::move(psi);
    out.dmInput = input.dims;
    out.dmRealized = realized.dims;
    out.solutionSpaceDim = rec.solutionSpaceDim;
    return out;
  }
  throw Error(ErrorKind::Internal, "exhausted 16 generic mixing matrices without a realization");
}

}  // namespace multifan
