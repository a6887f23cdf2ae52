#include "multifan/skew.hpp"

#include "multifan/errors.hpp"

namespace multifan {

namespace {

void sortedSubsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SkewForm SkewForm::basis(int n, const std::vector<int>& set) {
  SkewForm f = zero(n, static_cast<int>(set.size()));
  f.add(set, Rational(1));
  return f;
}

void SkewForm::add(const std::vector<int>& set, const Rational& value) {
  if (value == 0) return;
  internalCheck(static_cast<int>(set.size()) == k, "skew coordinate rank mismatch");
  for (size_t i = 0; i + 1 < set.size(); ++i)
    internalCheck(set[i] < set[i + 1], "skew coordinate set must be sorted");
  auto it = coords.find(set);
  if (it == coords.end()) {
    coords.emplace(set, value);
  } else {
    it->second += value;
    if (it->second == 0) coords.erase(it);
  }
}

Rational SkewForm::coord(const std::vector<int>& set) const {
  auto it = coords.find(set);
  return it == coords.end() ? Rational(0) : it->second;
}

SkewForm wedge(const std::vector<QVector>& vectors, int n) {
  int k = static_cast<int>(vectors.size());
  requirePre(k <= n, "wedge rank exceeds ambient dimension");
  for (const auto& v : vectors)
    internalCheck(static_cast<int>(v.size()) == n, "wedge vector dimension mismatch");
  SkewForm f = SkewForm::zero(n, k);
  std::vector<std::vector<int>> subsets;
  sortedSubsets(n, k, subsets);
  for (const auto& s : subsets) {
    QMatrix minor(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) minor.at(r, c) = vectors[r][s[c]];
    f.add(s, det(minor));
  }
  return f;
}

Rational pairSkew(const SkewForm& a, const SkewForm& b) {
  requirePre(a.n == b.n && a.k == b.k, "skew pairing rank mismatch");
  Rational total = 0;
  for (const auto& [s, x] : a.coords) {
    auto it = b.coords.find(s);
    if (it != b.coords.end()) total += x * it->second;
  }
  return total;
}

Rational covolSquared(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return Rational(1);
  SkewForm w = wedge(vectors, static_cast<int>(vectors[0].size()));
  return pairSkew(w, w);
}

}  // namespace multifan
