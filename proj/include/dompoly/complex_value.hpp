#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "dompoly/polynomial.hpp"

namespace dompoly {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kMinPrecisionBits = 53;
inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Sets the working precision for newly created Real values and restores
/// the previous one on destruction.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  unsigned bits() const noexcept { return bits_; }

 private:
  unsigned bits_;
  unsigned saved_digits10_;
};

Real to_real(const BigInt& z);

/// Complex number over Real at the precision active when it was created.
struct ComplexValue {
  Real re = 0;
  Real im = 0;

  ComplexValue() = default;
  ComplexValue(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexValue(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  ComplexValue& operator+=(const ComplexValue& o);
  ComplexValue& operator-=(const ComplexValue& o);
  ComplexValue& operator*=(const ComplexValue& o);
  ComplexValue& operator/=(const ComplexValue& o);

  friend ComplexValue operator+(ComplexValue a, const ComplexValue& b) { return a += b; }
  friend ComplexValue operator-(ComplexValue a, const ComplexValue& b) { return a -= b; }
  friend ComplexValue operator*(ComplexValue a, const ComplexValue& b) { return a *= b; }
  friend ComplexValue operator/(ComplexValue a, const ComplexValue& b) { return a /= b; }
  friend ComplexValue operator-(const ComplexValue& a) { return {-a.re, -a.im}; }

  std::complex<double> to_double() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
};

Real norm(const ComplexValue& z);
Real abs(const ComplexValue& z);
ComplexValue polar(const Real& r, const Real& theta);

ComplexValue eval_complex(const IntPolynomial& p, const ComplexValue& z);
std::complex<double> eval_complex(const IntPolynomial& p, std::complex<double> z);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);

}  // namespace dompoly
