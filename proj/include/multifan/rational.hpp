#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace multifan {

// Exact arithmetic over Q. Canonical mpq values are always in lowest terms
// with positive denominator; every construction path below preserves that.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline int sgn(const Rational& q) { return q.sign(); }

/// Parses "p/q" or "p" (optionally signed). Canonicalizes; rejects q == 0.
Rational parseRational(const std::string& text);

/// Formats in lowest terms as "p/q", or "p" when the denominator is 1.
std::string formatRational(const Rational& q);

Rational factorialOf(int k);
Rational binomialOf(int n, int k);

inline double toDouble(const Rational& q) { return q.convert_to<double>(); }

}  // namespace multifan
