#include "dompoly/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dompoly/roots.hpp"

namespace dompoly {

namespace {

double equimodular_gap(const IntPolynomial& a, const IntPolynomial& b, Point z) {
  return std::norm(eval_complex(a, z)) - std::norm(eval_complex(b, z));
}

bool proportional_with_unit_ratio(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return false;
  if (abs(a.leading()) != abs(b.leading())) return false;
  return a * b.leading() == b * a.leading();
}

/// Samples t -> f(t) on [t0, t1], split into maximal runs inside `window`,
/// each run resampled uniformly with `samples` points and its ends bisected
/// onto the window boundary.
std::vector<CurvePiece> sample_parametric(const std::string& label, ImplicitForm form,
                                          const std::function<Point(double)>& f, double t0, double t1,
                                          std::size_t samples, const RealWindow& window) {
  constexpr std::size_t kProbe = 4096;
  auto inside = [&](double t) { return window.contains(f(t)); };
  auto boundary = [&](double in, double out) {
    for (int i = 0; i < 200 && std::abs(in - out) > 1e-15 * std::max(1.0, std::abs(in)); ++i) {
      const double mid = 0.5 * (in + out);
      (inside(mid) ? in : out) = mid;
    }
    return in;
  };

  std::vector<std::pair<double, double>> runs;
  double run_start = 0;
  bool in_run = false;
  double prev = t0;
  for (std::size_t k = 0; k <= kProbe; ++k) {
    const double t = t0 + (t1 - t0) * static_cast<double>(k) / kProbe;
    const bool ok = inside(t);
    if (ok && !in_run) {
      run_start = k == 0 ? t : boundary(t, prev);
      in_run = true;
    } else if (!ok && in_run) {
      runs.emplace_back(run_start, boundary(prev, t));
      in_run = false;
    }
    prev = t;
  }
  if (in_run) runs.emplace_back(run_start, t1);

  std::vector<CurvePiece> pieces;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto [a, b] = runs[r];
    if (!(b > a)) continue;
    CurvePiece piece;
    piece.label = runs.size() == 1 ? label : label + "-" + std::to_string(r + 1);
    piece.form = form;
    piece.window = window;
    piece.parametrization = f;
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = a + (b - a) * static_cast<double>(k) / static_cast<double>(samples - 1);
      piece.parameters.push_back(t);
      piece.samples.push_back(f(t));
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

void append(LimitCurve& curve, std::vector<CurvePiece> pieces) {
  for (auto& p : pieces) curve.pieces.push_back(std::move(p));
}

Point hyperbola_point(double t, bool right) {
  const double a = std::cosh(t) / std::numbers::sqrt2;
  return {-1.0 + (right ? a : -a), std::sinh(t) / std::numbers::sqrt2};
}

Point quartic_point(double theta, bool outer) {
  const double c = 1.0 - 2.0 * std::cos(theta);
  const double disc = std::max(0.0, c * c - 4.0);
  const double r_outer = 0.5 * (c + std::sqrt(disc));
  const double r = outer ? r_outer : 1.0 / r_outer;
  return std::polar(r, theta);
}

double golden_minimize(const std::function<double(double)>& f, double a, double b) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 200 && std::abs(b - a) > 1e-15 * std::max(1.0, std::abs(a)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  return std::min({fc, fd, f(a), f(b)});
}

double segment_distance(Point z, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

}  // namespace

ExponentialFamily::ExponentialFamily(std::vector<ExponentialTerm> terms) : terms_(std::move(terms)) {
  if (terms_.size() < 2 || terms_.size() > 3) {
    throw DegenerateFamily("exponential family must have two or three terms");
  }
  for (const auto& t : terms_) {
    if (t.alpha.is_zero() || t.lambda.is_zero()) throw DegenerateFamily("alpha and lambda must be nonzero");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (proportional_with_unit_ratio(terms_[i].lambda, terms_[j].lambda)) {
        throw DegenerateFamily("lambda_" + std::to_string(i + 1) + " is a unit-modulus multiple of lambda_" +
                               std::to_string(j + 1) + "; the family is identically equimodular");
      }
}

ExponentialFamily ExponentialFamily::two_term(IntPolynomial alpha1, IntPolynomial lambda1, IntPolynomial alpha2,
                                              IntPolynomial lambda2) {
  return ExponentialFamily({{std::move(alpha1), std::move(lambda1)}, {std::move(alpha2), std::move(lambda2)}});
}

ExponentialFamily friendship_family() {
  return ExponentialFamily::two_term(IntPolynomial{1}, IntPolynomial{0, 2, 1}, IntPolynomial{0, 1},
                                     IntPolynomial{1, 2, 1});
}

ExponentialFamily friendship_family_y() {
  return ExponentialFamily::two_term(IntPolynomial{1}, IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1},
                                     IntPolynomial{0, 0, 1});
}

ExponentialFamily book_family() {
  return ExponentialFamily({{IntPolynomial{1, 2}, IntPolynomial{0, 2, 1}},
                            {IntPolynomial{0, 0, 1}, IntPolynomial{1, 2, 1}},
                            {IntPolynomial{-2}, IntPolynomial{0, 1}}});
}

IntPolynomial family_member(const ExponentialFamily& family, unsigned n) {
  if (n == 0) throw InvalidParameter("family_member: n must be at least 1");
  IntPolynomial sum;
  for (const auto& t : family.terms()) sum += t.alpha * pow(t.lambda, n);
  return sum;
}

double CurvePiece::residual(Point z) const {
  switch (form) {
    case ImplicitForm::FriendshipHyperbola: {
      const double a = z.real() + 1.0, b = z.imag();
      return a * a - b * b - 0.5;
    }
    case ImplicitForm::BookCircle: return std::norm(z + 2.0) - 1.0;
    case ImplicitForm::BookQuartic: return std::norm(z + 1.0) - std::abs(z);
    case ImplicitForm::Equimodular: {
      const double ma = std::abs(eval_complex(lambda_a, z)), mb = std::abs(eval_complex(lambda_b, z));
      return (ma - mb) / std::max(1.0, ma + mb);
    }
  }
  return 0.0;
}

std::size_t LimitCurve::sample_count() const {
  std::size_t n = 0;
  for (const auto& p : pieces) n += p.samples.size();
  return n;
}

LimitCurve bkw_limit_points(const ExponentialFamily& family, const GridSpec& grid, double tol) {
  if (grid.re_steps == 0 || grid.im_steps == 0 || !(grid.re_max > grid.re_min) || !(grid.im_max > grid.im_min)) {
    throw InvalidParameter("bkw_limit_points: empty grid");
  }
  const std::size_t k = family.size();
  const std::size_t cols = grid.re_steps + 1, rows = grid.im_steps + 1;
  auto node = [&](std::size_t i, std::size_t j) {
    return Point(grid.re_min + (grid.re_max - grid.re_min) * static_cast<double>(i) / static_cast<double>(grid.re_steps),
                 grid.im_min + (grid.im_max - grid.im_min) * static_cast<double>(j) / static_cast<double>(grid.im_steps));
  };

  auto dominates = [&](Point z, const std::vector<std::size_t>& top) {
    double floor_mod = std::numeric_limits<double>::infinity();
    for (auto t : top) floor_mod = std::min(floor_mod, std::abs(eval_complex(family.term(t).lambda, z)));
    for (std::size_t o = 0; o < k; ++o) {
      if (std::find(top.begin(), top.end(), o) != top.end()) continue;
      if (!(std::abs(eval_complex(family.term(o).lambda, z)) < floor_mod * (1.0 - 1e-9))) return false;
    }
    return true;
  };

  LimitCurve curve;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& la = family.term(a).lambda;
      const auto& lb = family.term(b).lambda;
      std::vector<double> value(cols * rows);
      for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < cols; ++i) value[j * cols + i] = equimodular_gap(la, lb, node(i, j));

      CurvePiece piece;
      piece.label = "|l" + std::to_string(a + 1) + "|=|l" + std::to_string(b + 1) + "|";
      piece.form = ImplicitForm::Equimodular;
      piece.lambda_a = la;
      piece.lambda_b = lb;

      auto trace_edge = [&](Point p, double vp, Point q, double vq) {
        if (vp == 0) {
          if (dominates(p, {a, b})) piece.samples.push_back(p);
          return;
        }
        if (vp * vq >= 0) return;
        for (int it = 0; it < 200 && std::abs(q - p) > tol; ++it) {
          const Point mid = 0.5 * (p + q);
          const double vm = equimodular_gap(la, lb, mid);
          if (vm == 0) {
            p = q = mid;
            break;
          }
          if ((vm < 0) == (vp < 0)) {
            p = mid;
            vp = vm;
          } else {
            q = mid;
          }
        }
        const Point z = 0.5 * (p + q);
        if (dominates(z, {a, b})) piece.samples.push_back(z);
      };

      for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < cols; ++i) {
          const double v = value[j * cols + i];
          if (i + 1 < cols) trace_edge(node(i, j), v, node(i + 1, j), value[j * cols + i + 1]);
          if (j + 1 < rows) trace_edge(node(i, j), v, node(i, j + 1), value[(j + 1) * cols + i]);
        }
      }
      if (!piece.samples.empty()) curve.pieces.push_back(std::move(piece));
    }
  }

  SolverOptions solver;
  solver.precision_bits = 128;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& alpha = family.term(j).alpha;
    if (alpha.degree() < 1) continue;
    const RootSet roots = all_roots(alpha, solver);
    std::vector<Point> candidates;
    if (roots.zero_multiplicity > 0) candidates.emplace_back(0.0, 0.0);
    for (const auto& r : roots.complex_roots) candidates.push_back(r.value.to_double());
    for (const auto z : candidates) {
      if (!dominates(z, {j})) continue;
      const bool seen = std::any_of(curve.isolated_points.begin(), curve.isolated_points.end(),
                                    [&](Point w) { return std::abs(w - z) < 1e-12; });
      if (!seen) curve.isolated_points.push_back(z);
    }
  }
  return curve;
}

LimitCurve friendship_limit_curve(std::size_t samples, double t_max) {
  if (samples < 2) throw InvalidParameter("friendship_limit_curve: need at least 2 samples per branch");
  LimitCurve curve;
  for (bool right : {false, true}) {
    append(curve, sample_parametric(right ? "hyperbola-right" : "hyperbola-left", ImplicitForm::FriendshipHyperbola,
                                    [right](double t) { return hyperbola_point(t, right); }, -t_max, t_max, samples,
                                    RealWindow{}));
  }
  curve.isolated_points.emplace_back(0.0, 0.0);
  return curve;
}

double book_junction_abscissa() { return -1.5 - std::numbers::sqrt2 / 2.0; }

LimitCurve book_limit_curve(std::size_t samples, const BookCurveOptions& options) {
  if (samples < 2) throw InvalidParameter("book_limit_curve: need at least 2 samples per piece");
  const double junction = book_junction_abscissa();
  LimitCurve curve;

  RealWindow circle_window;
  if (options.clip) circle_window.min_re = junction;
  append(curve, sample_parametric("circle", ImplicitForm::BookCircle,
                                  [](double phi) { return Point(-2.0, 0.0) + std::polar(1.0, phi); },
                                  -std::numbers::pi, std::numbers::pi, samples, circle_window));

  RealWindow hyperbola_window;
  hyperbola_window.min_re = options.hyperbola_min_re;
  for (bool right : {false, true}) {
    append(curve, sample_parametric(right ? "hyperbola-right" : "hyperbola-left", ImplicitForm::FriendshipHyperbola,
                                    [right](double t) { return hyperbola_point(t, right); }, -options.t_max,
                                    options.t_max, samples, hyperbola_window));
  }

  RealWindow quartic_window;
  if (options.clip) quartic_window.max_re = junction;
  const double lo = 2.0 * std::numbers::pi / 3.0, hi = 4.0 * std::numbers::pi / 3.0;
  for (bool outer : {true, false}) {
    if (options.clip && !outer) continue;
    append(curve, sample_parametric(outer ? "quartic-outer" : "quartic-inner", ImplicitForm::BookQuartic,
                                    [outer](double theta) { return quartic_point(theta, outer); }, lo, hi, samples,
                                    quartic_window));
  }
  return curve;
}

double distance_to_curve(Point z, const LimitCurve& curve) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : curve.pieces) {
    const auto& s = piece.samples;
    if (s.empty()) continue;
    if (!piece.ordered()) {
      for (const auto& p : s) best = std::min(best, std::abs(z - p));
      continue;
    }
    // The polyline only brackets; chords cut inside curved pieces, so the
    // reported distance comes from the parametrization.
    std::size_t nearest = 0, segment = 0;
    double segment_best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (std::abs(z - s[k]) < std::abs(z - s[nearest])) nearest = k;
      if (k + 1 < s.size()) {
        const double d = segment_distance(z, s[k], s[k + 1]);
        if (d < segment_best) {
          segment_best = d;
          segment = k;
        }
      }
    }
    auto along = [&](double t) { return std::abs(z - piece.parametrization(t)); };
    auto bracket = [&](std::size_t lo, std::size_t hi) {
      return golden_minimize(along, piece.parameters[lo], piece.parameters[std::min(hi, s.size() - 1)]);
    };
    best = std::min(best, bracket(nearest == 0 ? 0 : nearest - 1, nearest + 1));
    best = std::min(best, bracket(segment == 0 ? 0 : segment - 1, segment + 2));
  }
  if (!std::isfinite(best)) throw InvalidParameter("distance_to_curve: curve has no samples");
  return best;
}

double distance_to_curve(const ComplexValue& z, const LimitCurve& curve) {
  return distance_to_curve(z.to_double(), curve);
}

}  // namespace dompoly
