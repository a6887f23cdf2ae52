#include "multifan/linalg.hpp"

#include "multifan/errors.hpp"

namespace multifan {

QVector operator+(const QVector& a, const QVector& b) {
  internalCheck(a.size() == b.size(), "vector size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  internalCheck(a.size() == b.size(), "vector size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator*(const Rational& s, const QVector& a) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  internalCheck(a.size() == b.size(), "vector size mismatch");
  Rational r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool isZeroVector(const QVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::fromRows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  QMatrix m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    internalCheck(rows[r].size() == m.cols(), "ragged rows");
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::row(size_t r) const {
  QVector v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

QVector QMatrix::col(size_t c) const {
  QVector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QMatrix QMatrix::transposed() const {
  QMatrix m(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

QMatrix QMatrix::selectColumns(const std::vector<int>& cols) const {
  QMatrix m(rows_, cols.size());
  for (size_t r = 0; r < rows_; ++r)
    for (size_t j = 0; j < cols.size(); ++j) m.at(r, j) = at(r, cols[j]);
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  internalCheck(a.cols() == b.rows(), "matrix product shape mismatch");
  QMatrix m(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(r, k) == 0) continue;
      for (size_t c = 0; c < b.cols(); ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  internalCheck(a.cols() == x.size(), "matrix-vector shape mismatch");
  QVector r(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (size_t c = 0; c < a.cols(); ++c) s += a.at(i, c) * x[c];
    r[i] = s;
  }
  return r;
}

RrefResult rref(QMatrix m) {
  RrefResult res;
  size_t pivotRow = 0;
  for (size_t c = 0; c < m.cols() && pivotRow < m.rows(); ++c) {
    size_t sel = pivotRow;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivotRow)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivotRow, j));
    Rational inv = 1 / m.at(pivotRow, c);
    for (size_t j = c; j < m.cols(); ++j) m.at(pivotRow, j) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == pivotRow || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pivotRow, j);
    }
    res.pivotCols.push_back(static_cast<int>(c));
    ++pivotRow;
  }
  res.rank = static_cast<int>(pivotRow);
  res.reduced = std::move(m);
  return res;
}

int rankOf(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> kernelBasis(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (int c : r.pivotCols) isPivot[c] = true;
  std::vector<QVector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (size_t p = 0; p < r.pivotCols.size(); ++p)
      v[r.pivotCols[p]] = -r.reduced.at(p, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const QMatrix& m) {
  internalCheck(m.rows() == m.cols(), "determinant of non-square matrix");
  QMatrix a = m;
  size_t n = a.rows();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && a.at(sel, c) == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rational inv = 1 / a.at(c, c);
    for (size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c) == 0) continue;
      Rational f = a.at(r, c) * inv;
      for (size_t j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

std::optional<QVector> solveLinear(const QMatrix& a, const QVector& b) {
  internalCheck(a.rows() == b.size(), "solve shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RrefResult rr = rref(std::move(aug));
  for (int c : rr.pivotCols)
    if (c == static_cast<int>(a.cols())) return std::nullopt;
  QVector x(a.cols(), Rational(0));
  for (size_t p = 0; p < rr.pivotCols.size(); ++p)
    x[rr.pivotCols[p]] = rr.reduced.at(p, a.cols());
  return x;
}

}  // namespace multifan
