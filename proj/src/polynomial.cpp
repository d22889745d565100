#include "dompoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dompoly/error.hpp"

namespace dompoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw InvalidParameter("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPolynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial shift(const IntPolynomial& p, const BigInt& c) {
  // Taylor shift by repeated synthetic division.
  std::vector<BigInt> a(p.coefficients().begin(), p.coefficients().end());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      mpz_addmul(a[j].get_mpz_t(), a[j + 1].get_mpz_t(), c.get_mpz_t());
    }
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial strip_zero_roots(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const auto c = p.coefficients();
  return IntPolynomial(std::vector<BigInt>(c.begin() + static_cast<long>(p.valuation()), c.end()));
}

BigInt eval(const IntPolynomial& p, const BigInt& k) {
  return horner(p, k, [](const BigInt& c) { return c; });
}

int sign_at(const IntPolynomial& p, const Rational& q) {
  // Homogenized Horner: sum c_i num^i den^(d-i), den > 0.
  const auto c = p.coefficients();
  if (c.empty()) return 0;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  BigInt acc = c.back();
  BigInt den_pow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + c[i] * den_pow;
  }
  return sgn(acc);
}

IntPolynomial derivative(const IntPolynomial& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<BigInt> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

ContentAndPrimitive content_and_primitive(const IntPolynomial& p) {
  if (p.is_zero()) return {0, {}};
  BigInt g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {g, IntPolynomial(std::move(out))};
}

IntPolynomial primitive_part(const IntPolynomial& p) { return content_and_primitive(p).primitive; }

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidParameter("pseudo_remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const BigInt& lb = b.leading();
  long pending = a.degree() - b.degree() + 1;
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift_by = static_cast<std::size_t>(r.degree() - b.degree());
    const IntPolynomial cancel = IntPolynomial::monomial(r.leading(), shift_by) * b;
    r *= lb;
    r -= cancel;
    --pending;
  }
  for (; pending > 0; --pending) r *= lb;
  return r;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidParameter("exact_quotient by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvalidParameter("exact_quotient: divisor does not divide");
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt rem;
    mpz_fdiv_qr(q[k].get_mpz_t(), rem.get_mpz_t(), r[k + db].get_mpz_t(), bc.back().get_mpz_t());
    if (rem != 0) throw InvalidParameter("exact_quotient: divisor does not divide");
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * bc[j];
  }
  if (std::any_of(r.begin(), r.end(), [](const BigInt& c) { return c != 0; })) {
    throw InvalidParameter("exact_quotient: divisor does not divide");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) return {};
  if (p.is_zero()) return content_and_primitive(q).primitive * abs(content_and_primitive(q).content);
  if (q.is_zero()) return content_and_primitive(p).primitive * abs(content_and_primitive(p).content);

  auto [cp, a] = content_and_primitive(p);
  auto [cq, b] = content_and_primitive(q);
  BigInt content;
  mpz_gcd(content.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
  if (a.degree() < b.degree()) std::swap(a, b);

  // Subresultant PRS on the primitive parts.
  BigInt g = 1, h = 1;
  IntPolynomial result;
  while (true) {
    if (b.degree() == 0) {
      result = IntPolynomial::constant(1);
      break;
    }
    const long delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) {
      result = b;
      break;
    }
    BigInt divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    std::vector<BigInt> rc(r.coefficients().begin(), r.coefficients().end());
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = IntPolynomial(std::move(rc));
    g = a.leading();
    if (delta > 0) {
      BigInt gd, hd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
    }
  }
  return primitive_part(result) * content;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  return primitive_part(exact_quotient(p, gcd(p, derivative(p))));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const BigInt mag = abs(c[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string serialize(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ",";
    out += c.get_str();
  }
  return out;
}

IntPolynomial parse_coefficients(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw ParseError("empty polynomial coefficient", start);
    token = token.substr(first, last - first + 1);
    BigInt value;
    if (value.set_str(std::string(token), 10) != 0) {
      throw ParseError("bad polynomial coefficient '" + std::string(token) + "'", start + first);
    }
    coeffs.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string to_string(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();
  return canonical.get_str();
}

}  // namespace dompoly
