#include "hyperchrom/polynomial.hpp"

#include <sstream>

#include "hyperchrom/errors.hpp"

namespace hyperchrom {

void IntPolynomial::add_term(int exponent, const BigInt& c) {
  if (exponent < 0) throw DomainError("negative exponent in IntPolynomial");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt IntPolynomial::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt IntPolynomial::eval(const BigInt& k) const {
  BigInt acc = 0;
  int e = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (; e > it->first; --e) acc *= k;
    acc += it->second;
  }
  for (; e > 0; --e) acc *= k;
  return acc;
}

std::vector<std::pair<int, BigInt>> IntPolynomial::terms() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "k";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

BigInt eval(const IntPolynomial& p, const BigInt& k) { return p.eval(k); }

BigInt ipow(const BigInt& k, unsigned e) { return boost::multiprecision::pow(k, e); }

}  // namespace hyperchrom
