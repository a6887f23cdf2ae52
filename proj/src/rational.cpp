#include "multifan/rational.hpp"

#include "multifan/errors.hpp"

namespace multifan {

Rational parseRational(const std::string& text) {
  requireValid(!text.empty(), "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    requireValid(q != 0, "rational literal with zero denominator: " + text);
    return Rational(p, q);  // the pair constructor canonicalizes
  } catch (const std::runtime_error& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::Validation, "bad rational literal: " + text);
  }
}

std::string formatRational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rational factorialOf(int k) {
  internalCheck(k >= 0, "factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return Rational(r);
}

Rational binomialOf(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact at every step: product of j consecutive ints is divisible by j!
  }
  return Rational(r);
}

}  // namespace multifan
