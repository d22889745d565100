#include "dompoly/complex_value.hpp"

#include <cmath>
#include <sstream>

#include "dompoly/error.hpp"

namespace dompoly {

WorkingPrecision::WorkingPrecision(unsigned bits)
    : bits_(bits), saved_digits10_(Real::default_precision()) {
  if (bits < kMinPrecisionBits) {
    throw InvalidParameter("working precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  }
  const auto digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
  Real::default_precision(digits10);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(saved_digits10_); }

Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

ComplexValue& ComplexValue::operator+=(const ComplexValue& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexValue& ComplexValue::operator-=(const ComplexValue& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexValue& ComplexValue::operator*=(const ComplexValue& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

ComplexValue& ComplexValue::operator/=(const ComplexValue& o) {
  const Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real norm(const ComplexValue& z) { return z.re * z.re + z.im * z.im; }

Real abs(const ComplexValue& z) { return boost::multiprecision::hypot(z.re, z.im); }

ComplexValue polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

ComplexValue eval_complex(const IntPolynomial& p, const ComplexValue& z) {
  return horner(p, z, [](const BigInt& c) { return ComplexValue(to_real(c), Real(0)); });
}

std::complex<double> eval_complex(const IntPolynomial& p, std::complex<double> z) {
  return horner(p, z, [](const BigInt& c) { return std::complex<double>(c.get_d(), 0.0); });
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

}  // namespace dompoly
