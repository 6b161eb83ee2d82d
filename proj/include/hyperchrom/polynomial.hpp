#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperchrom {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in k with arbitrary-precision coefficients; zero
/// coefficients are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  /// Adds c * k^exponent.
  void add_term(int exponent, const BigInt& c);

  BigInt coefficient(int exponent) const;
  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  BigInt leading_coefficient() const { return coeffs_.empty() ? BigInt(0) : coeffs_.rbegin()->second; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Exact Horner evaluation.
  BigInt eval(const BigInt& k) const;

  /// (exponent, coefficient) pairs, decreasing exponent.
  std::vector<std::pair<int, BigInt>> terms() const;

  /// Human-readable form, e.g. "k^5 - 2k^3 + k".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::map<int, BigInt> coeffs_;
};

BigInt eval(const IntPolynomial& p, const BigInt& k);

/// Exact k^e for e >= 0.
BigInt ipow(const BigInt& k, unsigned e);

}  // namespace hyperchrom
