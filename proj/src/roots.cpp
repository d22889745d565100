#include "dompoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

namespace dompoly {

namespace {

Rational power_of_two_above(const Rational& x) {
  Rational b = 1;
  while (b <= x) b *= 2;
  return b;
}

/// Bisection on a square-free polynomial with exactly one root in
/// (lo, hi].  lo may itself be a root (a neighbour hit exactly), so the
/// sign at hi drives the search.
RationalInterval refine(const IntPolynomial& sqf, Rational lo, Rational hi, const Rational& width) {
  const int hi_sign = sign_at(sqf, hi);
  if (hi_sign == 0) return {hi, hi};
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    const int s = sign_at(sqf, mid);
    if (s == 0) return {mid, mid};
    if (s == hi_sign) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }
  return {lo, hi};
}

void isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi, std::size_t count,
             const Rational& width, std::vector<RationalInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(refine(sturm.square_free(), lo, hi, width));
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const std::size_t left = sturm.count(lo, mid);
  isolate(sturm, lo, mid, left, width, out);
  isolate(sturm, mid, hi, count - left, width, out);
}

Real one_norm(const IntPolynomial& p) {
  Real s = 0;
  for (const auto& c : p.coefficients()) s += to_real(abs(c));
  return s;
}

struct HornerPair {
  ComplexValue value;
  ComplexValue slope;
};

HornerPair horner_with_derivative(const std::vector<Real>& c, const ComplexValue& z) {
  ComplexValue value(c.back(), Real(0));
  ComplexValue slope(Real(0), Real(0));
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    slope = slope * z + value;
    value = value * z;
    value.re += c[i];
  }
  return {value, slope};
}

/// normalized_residual on precomputed data: c holds the stripped
/// polynomial, k the removed zero multiplicity, degree the full degree.
double fast_residual(const std::vector<Real>& c, const Real& norm1, std::size_t k, long degree,
                     const ComplexValue& z) {
  ComplexValue value(c.back(), Real(0));
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    value = value * z;
    value.re += c[i];
  }
  const Real modulus = abs(z);
  Real scaled = abs(value) * boost::multiprecision::pow(modulus, static_cast<int>(k));
  scaled /= norm1 * boost::multiprecision::pow(std::max(Real(1), modulus), static_cast<int>(degree));
  return scaled.convert_to<double>();
}

/// Aberth in double precision from the same circle start.  The result
/// only seeds the multiprecision iteration, so non-finite or unconverged
/// iterates are fine as long as they are finite.
std::optional<std::vector<std::complex<double>>> double_seeds(const std::vector<Real>& c,
                                                              const std::vector<ComplexValue>& start,
                                                              unsigned max_iterations) {
  const std::size_t d = c.size() - 1;
  std::vector<double> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = c[i].convert_to<double>();
  for (double v : a)
    if (!std::isfinite(v)) return std::nullopt;
  std::vector<std::complex<double>> z(d);
  for (std::size_t j = 0; j < d; ++j) z[j] = start[j].to_double();
  std::vector<bool> done(d, false);
  for (unsigned iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (done[j]) continue;
      std::complex<double> value = a[d], slope = 0.0;
      for (std::size_t i = d; i-- > 0;) {
        slope = slope * z[j] + value;
        value = value * z[j] + a[i];
      }
      if (slope == 0.0) {
        all_done = false;
        continue;
      }
      const std::complex<double> ratio = value / slope;
      std::complex<double> repulsion = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        if (i != j) repulsion += 1.0 / (z[j] - z[i]);
      const std::complex<double> correction = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(correction.real()) || !std::isfinite(correction.imag())) return std::nullopt;
      z[j] -= correction;
      if (std::abs(correction) <= 1e-14 * std::max(1.0, std::abs(z[j]))) {
        done[j] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  auto sorted = z;
  std::sort(sorted.begin(), sorted.end(), [](auto x, auto y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return z;
}

Real root_radius(const std::vector<Real>& c) {
  const std::size_t d = c.size() - 1;
  const Real lead = boost::multiprecision::abs(c[d]);
  Real cauchy = 0;
  for (std::size_t i = 0; i < d; ++i) cauchy = std::max(cauchy, Real(boost::multiprecision::abs(c[i]) / lead));
  cauchy += 1;
  Real fujiwara = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    Real ratio = boost::multiprecision::abs(c[d - i]) / lead;
    if (i == d) ratio /= 2;
    if (ratio == 0) continue;
    fujiwara = std::max(fujiwara, Real(boost::multiprecision::pow(ratio, Real(1) / Real(i))));
  }
  fujiwara *= 2;
  return std::min(cauchy, fujiwara);
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidParameter("Sturm sequence of the zero polynomial");
  chain_.push_back(square_free_part(p));
  const IntPolynomial base = chain_.front();
  if (base.degree() >= 1) {
    chain_.push_back(primitive_part(derivative(base)));
    while (chain_.back().degree() > 0) {
      const auto& prev = chain_[chain_.size() - 2];
      const auto& cur = chain_.back();
      IntPolynomial r = pseudo_remainder(prev, cur);
      if (r.is_zero()) break;
      // prem carries lc(cur)^(delta+1); its sign decides whether -rem = -prem.
      const long power = prev.degree() - cur.degree() + 1;
      const bool flip = !(cur.leading() < 0 && power % 2 == 1);
      auto [content, prim] = content_and_primitive(r);
      // r = content * prim; keep the sign of r and apply the Sturm negation.
      IntPolynomial next = content < 0 ? -prim : prim;
      if (flip) next = -next;
      chain_.push_back(std::move(next));
    }
  }
  Rational cauchy = 0;
  const auto c = base.coefficients();
  const Rational lead = abs(base.leading());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) cauchy = std::max(cauchy, Rational(Rational(abs(c[i])) / lead));
  bound_ = power_of_two_above(cauchy + 1);
}

std::size_t SturmSequence::variations(const Rational& q) const {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& s : chain_) {
    const int sign = sign_at(s, q);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

std::vector<RationalInterval> real_roots_exact(const IntPolynomial& p, unsigned refine_bits) {
  std::vector<RationalInterval> out;
  if (p.degree() < 1) return out;
  const SturmSequence sturm(p);
  const Rational bound = sturm.bound();
  Rational width = 1;
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), refine_bits);
  const Rational lo = -bound;
  isolate(sturm, lo, bound, sturm.count(lo, bound), width, out);
  return out;
}

std::vector<BigInt> integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidParameter("integer_roots of the zero polynomial");
  std::vector<BigInt> out;
  if (p.valuation() >= 1) out.emplace_back(0);
  const IntPolynomial q = strip_zero_roots(p);
  if (q.degree() < 1) return out;
  const BigInt& trailing = q.coefficients().front();
  for (const auto& interval : real_roots_exact(q, 2)) {
    BigInt first, last;
    mpz_cdiv_q(first.get_mpz_t(), interval.lo.get_num_mpz_t(), interval.lo.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), interval.hi.get_num_mpz_t(), interval.hi.get_den_mpz_t());
    for (BigInt r = first; r <= last; ++r) {
      if (mpz_divisible_p(trailing.get_mpz_t(), r.get_mpz_t()) && eval(q, r) == 0) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntervalCount count_real_roots_in(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (b < a) throw InvalidParameter("count_real_roots_in: empty interval (b < a)");
  const SturmSequence sturm(p);
  IntervalCount result;
  result.lower_is_root = sign_at(sturm.square_free(), a) == 0;
  result.upper_is_root = sign_at(sturm.square_free(), b) == 0;
  if (a == b) return result;
  result.count = sturm.count(a, b) - (result.upper_is_root ? 1 : 0);
  return result;
}

double normalized_residual(const IntPolynomial& p, const ComplexValue& z) {
  const Real modulus = abs(z);
  const Real scale = one_norm(p) * boost::multiprecision::pow(std::max(Real(1), modulus), static_cast<int>(p.degree()));
  return Real(abs(eval_complex(p, z)) / scale).convert_to<double>();
}

RootSet all_roots(const IntPolynomial& p, const SolverOptions& options) {
  if (p.degree() < 1) throw InvalidParameter("all_roots: degree must be at least 1");
  const WorkingPrecision precision(options.precision_bits);

  RootSet result;
  result.precision_bits = options.precision_bits;
  result.zero_multiplicity = p.valuation();
  const IntPolynomial q = strip_zero_roots(p);
  const auto d = static_cast<std::size_t>(q.degree());

  if (d >= 1) {
    std::vector<Real> c;
    c.reserve(d + 1);
    for (const auto& coeff : q.coefficients()) c.push_back(to_real(coeff));

    const Real norm1 = one_norm(q);
    const std::size_t k = result.zero_multiplicity;
    const long degree = p.degree();
    const Real radius = root_radius(c);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    std::vector<ComplexValue> z(d);
    for (std::size_t j = 0; j < d; ++j) {
      // Fixed angular offset keeps starts off the real axis.
      const Real theta = two_pi * Real(j) / Real(d) + Real(0.4) / Real(d) + Real(0.25);
      z[j] = polar(radius, theta);
    }
    if (const auto seeds = double_seeds(c, z, options.max_iterations)) {
      for (std::size_t j = 0; j < d; ++j) z[j] = ComplexValue(Real((*seeds)[j].real()), Real((*seeds)[j].imag()));
    }

    const Real step_floor = boost::multiprecision::ldexp(Real(1), -static_cast<int>(options.precision_bits / 2));
    const double residual_floor = std::ldexp(1.0, -static_cast<int>(options.precision_bits) + 20);
    std::vector<bool> done(d, false);
    std::vector<double> residual(d, 1.0);
    for (unsigned iter = 0; iter < options.max_iterations; ++iter) {
      bool all_done = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (done[j]) continue;
        auto [value, slope] = horner_with_derivative(c, z[j]);
        if (norm(slope) == 0) {
          z[j] *= ComplexValue(Real(1) + step_floor, step_floor);
          all_done = false;
          continue;
        }
        const ComplexValue ratio = value / slope;
        ComplexValue repulsion;
        for (std::size_t i = 0; i < d; ++i) {
          if (i != j) repulsion += ComplexValue(Real(1), Real(0)) / (z[j] - z[i]);
        }
        const ComplexValue correction = ratio / (ComplexValue(Real(1), Real(0)) - ratio * repulsion);
        z[j] -= correction;
        residual[j] = fast_residual(c, norm1, k, degree, z[j]);
        const bool small_step = abs(correction) <= step_floor * std::max(Real(1), abs(z[j]));
        if (residual[j] <= options.tolerance && (small_step || residual[j] <= residual_floor)) {
          done[j] = true;
        } else {
          all_done = false;
        }
      }
      if (all_done) break;
    }

    std::vector<ComplexRoot> roots;
    roots.reserve(d);
    for (std::size_t j = 0; j < d; ++j) roots.push_back({z[j], residual[j]});

    // Newton polishing, accepted only while the residual improves and the
    // step stays well inside the gap to the nearest other iterate.
    for (std::size_t j = 0; j < d; ++j) {
      Real gap = -1;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == j) continue;
        const Real dist = abs(roots[j].value - roots[i].value);
        if (gap < 0 || dist < gap) gap = dist;
      }
      for (unsigned step = 0; step < options.polish_steps; ++step) {
        auto [value, slope] = horner_with_derivative(c, roots[j].value);
        if (norm(slope) == 0) break;
        const ComplexValue delta = value / slope;
        if (gap >= 0 && abs(delta) * 1000 > gap) break;
        const ComplexValue candidate = roots[j].value - delta;
        const double r = fast_residual(c, norm1, k, degree, candidate);
        if (!(r < roots[j].residual)) break;
        roots[j] = {candidate, r};
      }
    }

    const auto worst = std::max_element(roots.begin(), roots.end(),
                                        [](const auto& a, const auto& b) { return a.residual < b.residual; });
    if (worst->residual > options.tolerance) {
      throw NonConvergence("all_roots: no convergence after " + std::to_string(options.max_iterations) +
                               " iterations; worst residual " + std::to_string(worst->residual),
                           std::move(roots));
    }
    std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
      if (a.value.re != b.value.re) return a.value.re < b.value.re;
      return a.value.im < b.value.im;
    });
    result.complex_roots = std::move(roots);
  }

  result.real_roots = real_roots_exact(p);
  result.integer_roots = integer_roots(p);
  return result;
}

}  // namespace dompoly
