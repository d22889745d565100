#pragma once

#include <cstddef>
#include <vector>

#include "dompoly/complex_value.hpp"
#include "dompoly/error.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/// Closed interval [lo, hi] holding exactly one real root of its
/// polynomial.  Degenerate (lo == hi) when the root is rational and was
/// hit exactly.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

struct ComplexRoot {
  ComplexValue value;
  /// |p(z)| / (||p||_1 max(1, |z|)^deg p).
  double residual;
};

struct RootSet {
  /// Nonzero roots, with multiplicity, sorted by (re, im).
  std::vector<ComplexRoot> complex_roots;
  /// Distinct real roots including 0, ascending.
  std::vector<RationalInterval> real_roots;
  std::vector<BigInt> integer_roots;
  /// k for the x^k factor removed before iterating.
  std::size_t zero_multiplicity = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
};

struct SolverOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  double tolerance = 1e-20;
  unsigned max_iterations = 2000;
  unsigned polish_steps = 8;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::vector<ComplexRoot> best)
      : Error(what), best_(std::move(best)) {}
  const std::vector<ComplexRoot>& best_iterate() const noexcept { return best_; }

 private:
  std::vector<ComplexRoot> best_;
};

/// Aberth-Ehrlich simultaneous iteration with Newton polishing, plus exact
/// real and integer roots.  Requires degree >= 1.
RootSet all_roots(const IntPolynomial& p, const SolverOptions& options = {});

/// Normalized backward residual used by all_roots.
double normalized_residual(const IntPolynomial& p, const ComplexValue& z);

/// Sturm-isolated distinct real roots, refined to width <= 2^-refine_bits.
std::vector<RationalInterval> real_roots_exact(const IntPolynomial& p, unsigned refine_bits = 40);

/// Integer roots, ascending, each checked by exact evaluation.
std::vector<BigInt> integer_roots(const IntPolynomial& p);

/// Exact number of distinct real roots in the open interval (a, b).
/// Endpoints that are themselves roots are excluded and flagged.
struct IntervalCount {
  std::size_t count = 0;
  bool lower_is_root = false;
  bool upper_is_root = false;
};
IntervalCount count_real_roots_in(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Sturm chain of the square-free part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  /// Sign variations at q (zeros skipped).
  std::size_t variations(const Rational& q) const;
  /// Distinct roots in the half-open interval (a, b].
  std::size_t count(const Rational& a, const Rational& b) const;
  const IntPolynomial& square_free() const { return chain_.front(); }
  /// Power of two strictly exceeding every root's modulus.
  const Rational& bound() const { return bound_; }

 private:
  std::vector<IntPolynomial> chain_;
  Rational bound_;
};

}  // namespace dompoly
