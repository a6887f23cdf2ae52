#pragma once

#include <map>
#include <vector>

#include "multifan/linalg.hpp"

namespace multifan {

/// Alternating k-form on Q^n in Pluecker coordinates: one rational per sorted
/// k-subset of {0..n-1}. Rank 0 is the scalar line (key = empty set).
struct SkewForm {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, Rational> coords;

  static SkewForm zero(int n, int k) { return {n, k, {}}; }
  /// Basis form e_{i1} ^ ... ^ e_{ik} for a sorted index set.
  static SkewForm basis(int n, const std::vector<int>& set);

  void add(const std::vector<int>& set, const Rational& value);
  Rational coord(const std::vector<int>& set) const;
  bool isZero() const { return coords.empty(); }
  bool operator==(const SkewForm& other) const = default;
};

/// Wedge of k row vectors in Q^n: Pluecker coordinate at a sorted subset S is
/// the k x k minor on columns S. Errors when k > n.
SkewForm wedge(const std::vector<QVector>& vectors, int n);

/// Euclidean pairing of equal-rank forms: sum over subsets of coordinate
/// products. pairSkew(wedge(S), wedge(S)) is the Gram determinant of S.
Rational pairSkew(const SkewForm& a, const SkewForm& b);

/// covol(S)^2 = det Gram(S), the squared parallelepiped volume of the rows.
Rational covolSquared(const std::vector<QVector>& vectors);

}  // namespace multifan
