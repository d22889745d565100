#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/complex_value.hpp"
#include "dompoly/error.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

using Point = std::complex<double>;

struct ExponentialTerm {
  IntPolynomial alpha;
  IntPolynomial lambda;
};

/// f_n = sum_i alpha_i lambda_i^n with two or three terms.
class ExponentialFamily {
 public:
  /// Throws DegenerateFamily when any alpha or lambda is zero or two
  /// lambdas differ by a unit-modulus constant.
  explicit ExponentialFamily(std::vector<ExponentialTerm> terms);

  static ExponentialFamily two_term(IntPolynomial alpha1, IntPolynomial lambda1, IntPolynomial alpha2,
                                    IntPolynomial lambda2);

  std::size_t size() const noexcept { return terms_.size(); }
  const ExponentialTerm& term(std::size_t i) const { return terms_.at(i); }
  const std::vector<ExponentialTerm>& terms() const noexcept { return terms_; }

 private:
  std::vector<ExponentialTerm> terms_;
};

class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

/// D(F_n, x) = (x^2 + 2x)^n + x ((1+x)^2)^n.
ExponentialFamily friendship_family();
/// Same family in y = 1 + x: (y^2 - 1)^n + (y - 1)(y^2)^n.
ExponentialFamily friendship_family_y();
/// D(B_n, x) = (2x+1)(x^2+2x)^n + x^2 ((x+1)^2)^n - 2 x^n.
ExponentialFamily book_family();

IntPolynomial family_member(const ExponentialFamily& family, unsigned n);

enum class ImplicitForm {
  /// (Re x + 1)^2 - (Im x)^2 - 1/2
  FriendshipHyperbola,
  /// |x + 2|^2 - 1
  BookCircle,
  /// |x + 1|^2 - |x|
  BookQuartic,
  /// |lambda_i(x)| - |lambda_j(x)| for a stored pair
  Equimodular,
};

struct RealWindow {
  double min_re = -std::numeric_limits<double>::infinity();
  double max_re = std::numeric_limits<double>::infinity();
  bool contains(Point z) const { return z.real() >= min_re && z.real() <= max_re; }
};

struct CurvePiece {
  std::string label;
  ImplicitForm form = ImplicitForm::Equimodular;
  /// Pair of lambdas for ImplicitForm::Equimodular.
  IntPolynomial lambda_a, lambda_b;
  RealWindow window;
  std::vector<Point> samples;
  /// Parametrization, when samples come from one; parameters[k] maps to
  /// samples[k] and is increasing.
  std::function<Point(double)> parametrization;
  std::vector<double> parameters;

  bool ordered() const { return static_cast<bool>(parametrization); }
  double residual(Point z) const;
};

struct LimitCurve {
  std::vector<CurvePiece> pieces;
  /// Limit points off the curve (BKW case (ii)).
  std::vector<Point> isolated_points;

  std::size_t sample_count() const;
};

struct GridSpec {
  double re_min = -3.5, re_max = 1.5;
  double im_min = -3.0, im_max = 3.0;
  std::size_t re_steps = 200, im_steps = 240;
};

/// Equimodular locus (case (i)) by sign changes of |lambda_i|^2 - |lambda_j|^2
/// along grid edges, bisected to `tol`, kept only where the pair dominates
/// the remaining lambdas; isolated points (case (ii)) from the roots of each
/// alpha_j where lambda_j strictly dominates.
LimitCurve bkw_limit_points(const ExponentialFamily& family, const GridSpec& grid, double tol = 1e-13);

/// (Re x + 1)^2 - (Im x)^2 = 1/2, both branches, |Im x| up to sinh(t_max)/sqrt 2,
/// with the isolated limit point 0.
LimitCurve friendship_limit_curve(std::size_t samples, double t_max = 4.0);

struct BookCurveOptions {
  /// Hyperbola pieces are kept where Re x >= this.
  double hyperbola_min_re = -1.0;
  /// When false the circle and quartic pieces are not clipped at the
  /// junction abscissa.
  bool clip = true;
  double t_max = 4.0;
};

/// -3/2 - sqrt(2)/2, where |x+2| = 1 meets |x+1|^2 = |x|.
double book_junction_abscissa();

LimitCurve book_limit_curve(std::size_t samples, const BookCurveOptions& options = {});

/// Minimum distance from z to the pieces of `curve` (isolated points not
/// included), refined on parametrized pieces by local minimization.
double distance_to_curve(Point z, const LimitCurve& curve);
double distance_to_curve(const ComplexValue& z, const LimitCurve& curve);

}  // namespace dompoly
