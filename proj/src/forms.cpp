#include "multifan/forms.hpp"

#include <algorithm>

#include "multifan/errors.hpp"

namespace multifan {

int degreeOf(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::vector<int> supportOf(const Exponents& e) {
  std::vector<int> s;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

Rational factorialProduct(const Exponents& e) {
  Rational r = 1;
  for (int x : e) r *= factorialOf(x);
  return r;
}

std::vector<Exponents> enumerateExponents(int m, int d) {
  std::vector<Exponents> out;
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Exponents cur(m, 0);
  // Recursive descent in lexicographic order: leftmost variable varies slowest.
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == m - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

HomogeneousForm HomogeneousForm::monomial(int m, const Exponents& e, const Rational& coef) {
  internalCheck(static_cast<int>(e.size()) == m, "monomial arity mismatch");
  HomogeneousForm f = zero(m, degreeOf(e));
  f.addTerm(e, coef);
  return f;
}

HomogeneousForm HomogeneousForm::linear(const QVector& coeffs) {
  HomogeneousForm f = zero(static_cast<int>(coeffs.size()), 1);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    f.addTerm(e, coeffs[i]);
  }
  return f;
}

void HomogeneousForm::addTerm(const Exponents& e, const Rational& coef) {
  if (coef == 0) return;
  internalCheck(static_cast<int>(e.size()) == m && degreeOf(e) == degree,
                "term outside the form's graded piece");
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

Rational HomogeneousForm::coeff(const Exponents& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? Rational(0) : it->second;
}

bool HomogeneousForm::operator==(const HomogeneousForm& other) const {
  return m == other.m && terms == other.terms;  // zero forms of any degree compare equal
}

std::string HomogeneousForm::toString(const std::string& var) const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [e, q] : terms) {
    if (!s.empty()) s += " + ";
    s += formatRational(q);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*" + var + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
  internalCheck(a.m == b.m, "form arity mismatch");
  internalCheck(a.isZero() || b.isZero() || a.degree == b.degree, "form degree mismatch");
  HomogeneousForm r = a.isZero() ? b : a;
  if (a.isZero()) return r;
  for (const auto& [e, q] : b.terms) r.addTerm(e, q);
  return r;
}

HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
  return a + (Rational(-1) * b);
}

HomogeneousForm operator*(const Rational& s, const HomogeneousForm& a) {
  HomogeneousForm r = HomogeneousForm::zero(a.m, a.degree);
  if (s == 0) return r;
  for (const auto& [e, q] : a.terms) r.terms.emplace(e, s * q);
  return r;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  internalCheck(a.m == b.m, "form arity mismatch");
  HomogeneousForm r = HomogeneousForm::zero(a.m, a.degree + b.degree);
  for (const auto& [ea, qa] : a.terms)
    for (const auto& [eb, qb] : b.terms) {
      Exponents e(a.m);
      for (int i = 0; i < a.m; ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, qa * qb);
    }
  return r;
}

HomogeneousForm power(const HomogeneousForm& a, int k) {
  internalCheck(k >= 0, "negative power");
  HomogeneousForm r = HomogeneousForm::monomial(a.m, Exponents(a.m, 0), 1);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Rational evaluate(const HomogeneousForm& f, const QVector& point) {
  internalCheck(static_cast<int>(point.size()) == f.m, "evaluation arity mismatch");
  Rational total = 0;
  for (const auto& [e, q] : f.terms) {
    Rational t = q;
    for (int i = 0; i < f.m; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

HomogeneousForm substituteZero(const HomogeneousForm& f, const std::vector<int>& vars) {
  std::vector<bool> drop(f.m, false);
  for (int v : vars) drop[v] = true;
  HomogeneousForm r = HomogeneousForm::zero(f.m, f.degree);
  for (const auto& [e, q] : f.terms) {
    bool uses = false;
    for (int i = 0; i < f.m; ++i)
      if (drop[i] && e[i] > 0) uses = true;
    if (!uses) r.terms.emplace(e, q);
  }
  return r;
}

HomogeneousForm shiftVariables(const HomogeneousForm& f, int mNew, int shift) {
  HomogeneousForm r = HomogeneousForm::zero(mNew, f.degree);
  for (const auto& [e, q] : f.terms) {
    Exponents en(mNew, 0);
    for (int i = 0; i < f.m; ++i) {
      internalCheck(e[i] == 0 || i + shift < mNew, "variable shift out of range");
      if (e[i] != 0) en[i + shift] = e[i];
    }
    r.terms.emplace(en, q);
  }
  return r;
}

DiffOp DiffOp::monomial(int m, const Exponents& e, const Rational& coef) {
  return {HomogeneousForm::monomial(m, e, coef)};
}

DiffOp DiffOp::variable(int m, int i) {
  Exponents e(m, 0);
  e[i] = 1;
  return monomial(m, e);
}

DiffOp DiffOp::squareFree(int m, const std::vector<int>& J) {
  Exponents e(m, 0);
  for (int i : J) {
    internalCheck(i >= 0 && i < m && e[i] == 0, "square-free index set expected");
    e[i] = 1;
  }
  return monomial(m, e);
}

DiffOp DiffOp::theta(const std::vector<QVector>& lambda, int j) {
  QVector coeffs(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) coeffs[i] = lambda[i][j];
  return {HomogeneousForm::linear(coeffs)};
}

DiffOp DiffOp::pairing(const QVector& c) { return {HomogeneousForm::linear(c)}; }

DiffOp operator+(const DiffOp& a, const DiffOp& b) { return {a.ops + b.ops}; }

DiffOp operator*(const Rational& s, const DiffOp& d) { return {s * d.ops}; }

HomogeneousForm applyDiffOp(const DiffOp& d, const HomogeneousForm& f) {
  int outDeg = std::max(f.degree - d.ops.degree, 0);
  HomogeneousForm r = HomogeneousForm::zero(f.m, outDeg);
  internalCheck(d.ops.m == f.m, "operator arity mismatch");
  for (const auto& [b, qb] : d.ops.terms) {
    for (const auto& [a, qa] : f.terms) {
      Rational factor = 1;
      Exponents e(f.m);
      bool vanished = false;
      for (int i = 0; i < f.m && !vanished; ++i) {
        if (a[i] < b[i]) {
          vanished = true;
          break;
        }
        e[i] = a[i] - b[i];
        for (int k = 0; k < b[i]; ++k) factor *= (a[i] - k);
      }
      if (!vanished) r.addTerm(e, qa * qb * factor);
    }
  }
  return r;
}

}  // namespace multifan
