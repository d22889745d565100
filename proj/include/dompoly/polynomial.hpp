#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dompoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense polynomial over Z.  coefficients()[i] multiplies x^i; trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  /// Zero past the degree.
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const;
  /// Index of the lowest nonzero coefficient; for a domination polynomial
  /// this is the domination number.
  std::size_t valuation() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Lexicographic on (degree, coefficients low to high).
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Square-and-multiply.
IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

/// p(x + c).
IntPolynomial shift(const IntPolynomial& p, const BigInt& c);
/// p / x^k for k = p.valuation(); the zero polynomial maps to itself.
IntPolynomial strip_zero_roots(const IntPolynomial& p);

BigInt eval(const IntPolynomial& p, const BigInt& k);
/// Sign (-1, 0, 1) of p at a rational point, exactly.
int sign_at(const IntPolynomial& p, const Rational& q);

/// Horner evaluation in any ring that can absorb an integer coefficient via
/// `lift(const BigInt&)`.
template <class Scalar, class Lift>
Scalar horner(const IntPolynomial& p, const Scalar& z, Lift&& lift) {
  const auto c = p.coefficients();
  if (c.empty()) return lift(BigInt(0));
  Scalar acc = lift(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + lift(c[i]);
  return acc;
}

IntPolynomial derivative(const IntPolynomial& p);

/// Content carries the sign that makes the primitive part's leading
/// coefficient positive; content(0) = 0.
struct ContentAndPrimitive {
  BigInt content;
  IntPolynomial primitive;
};
ContentAndPrimitive content_and_primitive(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Exact quotient a / b in Z[x]; throws InvalidParameter if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
/// Greatest common divisor via the subresultant remainder sequence,
/// normalized to a positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);
/// p / gcd(p, p'), primitive, positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// "3x + 3x^2 + x^3", low to high; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p);
/// Comma-separated decimal coefficients, low to high ("0,2,1").
std::string serialize(const IntPolynomial& p);
/// Inverse of serialize; whitespace around entries is tolerated.
IntPolynomial parse_coefficients(std::string_view text);

/// "p/q" with q > 0, or "p" for integers.
std::string to_string(const Rational& q);

}  // namespace dompoly
