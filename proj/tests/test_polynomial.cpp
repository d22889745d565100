#include <doctest.h>

#include <random>

#include "dompoly/complex_value.hpp"
#include "dompoly/error.hpp"
#include "dompoly/polynomial.hpp"

using namespace dompoly;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) {
  const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  std::vector<BigInt> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = static_cast<long>(rng() % static_cast<unsigned long>(2 * max_coeff + 1)) - max_coeff;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("representation strips trailing zeros") {
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial{0, 0, 3, 1}.valuation() == 2);
  CHECK(IntPolynomial{1, 1} - IntPolynomial{1, 1} == IntPolynomial());
}

TEST_CASE("arithmetic examples") {
  const IntPolynomial k2{0, 2, 1};
  CHECK(pow(k2, 1) == k2);
  CHECK(pow(IntPolynomial{1, 1}, 2) == IntPolynomial{1, 2, 1});
  CHECK(pow(k2, 0) == IntPolynomial{1});
  CHECK(pow(k2, 2) + IntPolynomial::x() * pow(IntPolynomial{1, 1}, 4) == IntPolynomial{0, 1, 8, 10, 5, 1});
  CHECK(IntPolynomial{1, 2} * BigInt(3) == IntPolynomial{3, 6});
  CHECK(-IntPolynomial{1, -2} == IntPolynomial{-1, 2});
}

TEST_CASE("big coefficients stay exact") {
  // C(60, 30) overflows 64 bits.
  const auto p = pow(IntPolynomial{1, 1}, 120);
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), 120, 60);
  CHECK(p.coefficient(60) == binom);
  CHECK(p.coefficient(60) > BigInt("18446744073709551615"));
}

TEST_CASE("evaluation") {
  const IntPolynomial f2{0, 1, 8, 10, 5, 1};
  CHECK(eval(f2, 1) == 25);
  CHECK(eval(f2, 0) == 0);
  CHECK(eval(IntPolynomial{7, 1}, 0) == 7);
  CHECK(eval(f2, -1) == 1);  // 0 - 1 + 8 - 10 + 5 - 1
  CHECK(sign_at(IntPolynomial{-1, 0, 4}, Rational(1, 2)) == 0);
  CHECK(sign_at(IntPolynomial{-1, 0, 4}, Rational(1, 3)) == -1);
  CHECK(sign_at(IntPolynomial{-1, 0, 4}, Rational(-2, 3)) == 1);

  const WorkingPrecision prec(256);
  const ComplexValue i(Real(0), Real(1));
  const auto v = eval_complex(IntPolynomial{1, 0, 1}, i);
  CHECK(abs(v) == 0);
  CHECK(eval_complex(IntPolynomial{1, 0, 1}, std::complex<double>(0, 1)) == std::complex<double>(0, 0));
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng, 6, 20), q = random_poly(rng, 6, 20), r = random_poly(rng, 6, 20);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    const BigInt k = static_cast<long>(rng() % 21) - 10;
    CHECK(eval(p * q, k) == eval(p, k) * eval(q, k));
    CHECK(eval(p + q, k) == eval(p, k) + eval(q, k));
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(IntPolynomial::monomial(1, 3)) == IntPolynomial{0, 0, 3});
  CHECK(derivative(IntPolynomial{5}).is_zero());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, 7, 30), q = random_poly(rng, 7, 30);
    CHECK(derivative(p + q) == derivative(p) + derivative(q));
    CHECK(derivative(p * q) == derivative(p) * q + p * derivative(q));
  }
}

TEST_CASE("content and primitive part") {
  const auto [c, prim] = content_and_primitive(IntPolynomial{-6, 0, -4});
  CHECK(c == -2);
  CHECK(prim == IntPolynomial{3, 0, 2});
  CHECK(content_and_primitive(IntPolynomial()).content == 0);
}

TEST_CASE("gcd") {
  const IntPolynomial p{0, 0, 2, 1};  // x^2 (x + 2)
  CHECK(gcd(p, derivative(p)) == IntPolynomial::x());
  CHECK(gcd(IntPolynomial{1, 1}, IntPolynomial{-1, 1}) == IntPolynomial{1});
  CHECK(gcd(IntPolynomial{2, 2}, IntPolynomial{4, 4}) == IntPolynomial{2, 2});
  CHECK(gcd(IntPolynomial(), IntPolynomial{0, -3}) == IntPolynomial{0, 3});
  CHECK(square_free_part(IntPolynomial{0, 0, 2, 1}) == IntPolynomial{0, 2, 1});
  CHECK(square_free_part(pow(IntPolynomial{1, 1}, 5) * pow(IntPolynomial{-2, 0, 1}, 3)) ==
        IntPolynomial{1, 1} * IntPolynomial{-2, 0, 1});

  // Random products sharing a factor: gcd recovers the shared factor up
  // to content, and always divides both inputs.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(rng, 4, 9);
    if (f.degree() < 1) continue;
    const auto a = random_poly(rng, 4, 9), b = random_poly(rng, 4, 9);
    if (a.is_zero() || b.is_zero()) continue;
    const IntPolynomial g = gcd(f * a, f * b);
    CHECK(g.leading() > 0);
    CHECK_NOTHROW(exact_quotient(f * a, g));
    CHECK_NOTHROW(exact_quotient(f * b, g));
    CHECK_NOTHROW(exact_quotient(g, primitive_part(f)));
    // And agrees with the gcd of the cofactors times f.
    CHECK(primitive_part(g) == primitive_part(primitive_part(f) * gcd(a, b)));
  }
}

TEST_CASE("exact quotient and pseudo-remainder") {
  CHECK(exact_quotient(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1}) == IntPolynomial{-1, 1});
  CHECK_THROWS_AS(exact_quotient(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), InvalidParameter);
  CHECK_THROWS_AS(exact_quotient(IntPolynomial{1, 0, 1}, IntPolynomial{0, 2}), InvalidParameter);
  // prem(x^2 + 1, 2x + 1) = 4 (x^2 + 1) mod (2x + 1) = 5
  CHECK(pseudo_remainder(IntPolynomial{1, 0, 1}, IntPolynomial{1, 2}) == IntPolynomial{5});
  // lc^(delta+1) is applied even when the degree drops by more than one
  CHECK(pseudo_remainder(IntPolynomial{1, 0, 0, 1}, IntPolynomial{0, 0, 2}) == IntPolynomial{4});
}

TEST_CASE("shift") {
  CHECK(shift(IntPolynomial::monomial(1, 2), 1) == IntPolynomial{1, 2, 1});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 8, 50);
    CHECK(shift(shift(p, 1), -1) == p);
    CHECK(eval(shift(p, 3), 2) == eval(p, 5));
  }
}

TEST_CASE("text formats") {
  CHECK(to_string(IntPolynomial{0, 3, 3, 1}) == "3x + 3x^2 + x^3");
  CHECK(to_string(IntPolynomial{0, 2, 1}) == "2x + x^2");
  CHECK(to_string(IntPolynomial{1}) == "1");
  CHECK(to_string(IntPolynomial{0, 0, -2, 1}) == "-2x^2 + x^3");
  CHECK(to_string(IntPolynomial{-1, 0, -1}) == "-1 - x^2");
  CHECK(to_string(IntPolynomial()) == "0");
  CHECK(serialize(IntPolynomial{0, 2, 1}) == "0,2,1");
  CHECK(parse_coefficients("0, 2 ,1") == IntPolynomial{0, 2, 1});
  CHECK(parse_coefficients("123456789012345678901234567890").coefficient(0) ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_coefficients("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_coefficients("1,a"), ParseError);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly(rng, 8, 1000);
    if (!p.is_zero()) CHECK(parse_coefficients(serialize(p)) == p);
  }
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("working precision guard") {
  CHECK_THROWS_AS(WorkingPrecision(52), InvalidParameter);
  const auto before = Real::default_precision();
  {
    const WorkingPrecision prec(512);
    CHECK(Real::default_precision() >= 154);
  }
  CHECK(Real::default_precision() == before);
}
