#pragma once

#include <optional>
#include <vector>

#include "multifan/rational.hpp"

namespace multifan {

using QVector = std::vector<Rational>;

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& a);
Rational dot(const QVector& a, const QVector& b);
bool isZeroVector(const QVector& a);

/// Dense rational matrix with explicit dimensions. Row-major storage.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(size_t n);
  static QMatrix fromRows(const std::vector<QVector>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  QVector row(size_t r) const;
  QVector col(size_t c) const;
  QMatrix transposed() const;
  /// Rows restricted to the given column subset, original order.
  QMatrix selectColumns(const std::vector<int>& cols) const;

  bool operator==(const QMatrix& other) const = default;

private:
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& x);

struct RrefResult {
  QMatrix reduced;
  std::vector<int> pivotCols;  // ascending; pivot r sits in row r
  int rank = 0;
};

/// Reduced row echelon form. Deterministic: columns are processed left to
/// right and the first row with a nonzero entry becomes the pivot; pivots are
/// scaled to 1 and eliminated above and below. No magnitude-based pivoting —
/// arithmetic is exact, so the choice is purely a determinism convention.
RrefResult rref(QMatrix m);

int rankOf(const QMatrix& m);

/// Kernel basis, one vector per free column in ascending column order; the
/// free variable is set to 1 and the pivot variables are back-substituted.
std::vector<QVector> kernelBasis(const QMatrix& m);

/// Determinant of a square matrix by exact Gaussian elimination.
Rational det(const QMatrix& m);

/// Particular solution of A x = b with all free variables set to zero.
/// Returns nullopt when the system is inconsistent.
std::optional<QVector> solveLinear(const QMatrix& a, const QVector& b);

}  // namespace multifan
