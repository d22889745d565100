#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dompoly/domination.hpp"
#include "dompoly/limits.hpp"
#include "dompoly/roots.hpp"

using namespace dompoly;

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<double> root_distances(unsigned n, const LimitCurve& curve) {
  std::vector<double> out;
  for (const auto& r : all_roots(family_poly({FamilyKind::Friendship, n})).complex_roots) {
    const Point z = r.value.to_double();
    if (std::abs(z) < 0.15) continue;
    out.push_back(distance_to_curve(z, curve));
  }
  return out;
}

}  // namespace

TEST_CASE("family members") {
  const auto fam = friendship_family();
  const auto fam_y = friendship_family_y();
  for (unsigned n = 1; n <= 12; ++n) {
    const auto d = family_poly({FamilyKind::Friendship, n});
    CHECK(family_member(fam, n) == d);
    // D(x) = f(1 + x), so f = D(y - 1).
    CHECK(shift(family_member(fam_y, n), 1) == d);
    CHECK(shift(d, -1) == family_member(fam_y, n));
    CHECK(family_member(book_family(), n) == family_poly({FamilyKind::Book, n}));
  }
  CHECK(family_member(fam, 1) == fam.term(0).alpha * fam.term(0).lambda + fam.term(1).alpha * fam.term(1).lambda);
  // (y^2-1)^2 + (y-1) y^4 expanded by hand.
  CHECK(shift(family_poly({FamilyKind::Friendship, 2}), -1) == IntPolynomial{1, 0, -2, 0, 0, 1});
  CHECK_THROWS_AS(family_member(fam, 0), InvalidParameter);
}

TEST_CASE("degenerate families are rejected") {
  const IntPolynomial one{1}, y{0, 1};
  CHECK_THROWS_AS(ExponentialFamily::two_term(one, y, one, -y), DegenerateFamily);
  CHECK_THROWS_AS(ExponentialFamily::two_term(one, y, one, y), DegenerateFamily);
  CHECK_THROWS_AS(ExponentialFamily::two_term(IntPolynomial{}, y, one, y), DegenerateFamily);
  CHECK_THROWS_AS(ExponentialFamily({{one, y}}), DegenerateFamily);
  CHECK_NOTHROW(ExponentialFamily::two_term(one, y, one, IntPolynomial{0, 2}));
  CHECK_NOTHROW(ExponentialFamily::two_term(one, y, one, IntPolynomial{2, 1}));
}

TEST_CASE("BKW tracer on the friendship family") {
  const auto curve = bkw_limit_points(friendship_family(), GridSpec{});
  REQUIRE(curve.pieces.size() == 1);
  const auto& piece = curve.pieces[0];
  CHECK(piece.samples.size() > 500);
  const IntPolynomial y2_minus_1{-1, 0, 1}, y2{0, 0, 1};
  double worst = 0, worst_hyperbola = 0;
  for (const auto& z : piece.samples) {
    worst = std::max(worst, std::abs(piece.residual(z)));
    const Point y = z + 1.0;
    const double lhs = std::abs(y * y - 1.0), rhs = std::abs(y * y);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
    worst_hyperbola = std::max(worst_hyperbola, std::abs(y.real() * y.real() - y.imag() * y.imag() - 0.5));
  }
  CHECK(worst <= 1e-10);
  CHECK(worst_hyperbola <= 1e-10);
  REQUIRE(curve.isolated_points.size() == 1);
  CHECK(std::abs(curve.isolated_points[0]) < 1e-30);

  // In y = 1 + x the isolated point is y = 1.
  const auto curve_y = bkw_limit_points(friendship_family_y(), GridSpec{-2.5, 2.5, -3, 3, 200, 240});
  REQUIRE(curve_y.isolated_points.size() == 1);
  CHECK(std::abs(curve_y.isolated_points[0] - Point(1, 0)) < 1e-25);
}

TEST_CASE("BKW tracer agrees with the closed-form hyperbola") {
  const auto traced = bkw_limit_points(friendship_family(), GridSpec{});
  const auto exact = friendship_limit_curve(2000);
  double worst = 0;
  for (const auto& z : traced.pieces[0].samples) worst = std::max(worst, distance_to_curve(z, exact));
  CHECK(worst <= 1e-6);
}

TEST_CASE("symmetric family traces the line Re y = -1") {
  const auto fam = ExponentialFamily::two_term(IntPolynomial{1}, IntPolynomial{0, 1}, IntPolynomial{1}, IntPolynomial{2, 1});
  const auto curve = bkw_limit_points(fam, GridSpec{-3, 1, -2, 2, 80, 80});
  REQUIRE(curve.pieces.size() == 1);
  CHECK(curve.pieces[0].samples.size() >= 80);
  for (const auto& z : curve.pieces[0].samples) CHECK(std::abs(z.real() + 1.0) <= 1e-12);
  CHECK(curve.isolated_points.empty());
}

TEST_CASE("friendship limit curve") {
  const auto curve = friendship_limit_curve(401);
  REQUIRE(curve.pieces.size() == 2);
  CHECK(curve.pieces[0].label == "hyperbola-left");
  CHECK(curve.pieces[1].label == "hyperbola-right");
  REQUIRE(curve.isolated_points.size() == 1);
  CHECK(curve.isolated_points[0] == Point(0, 0));
  for (const auto& piece : curve.pieces) {
    CHECK(piece.samples.size() == 401);
    for (const auto& z : piece.samples) {
      CHECK(std::abs(piece.residual(z)) <= 1e-12 * std::max(1.0, std::norm(z)));
    }
  }
  // Real-axis crossings at t = 0 (middle sample).
  CHECK(std::abs(curve.pieces[0].samples[200] - Point(-1.0 - std::numbers::sqrt2 / 2, 0)) < 1e-15);
  CHECK(std::abs(curve.pieces[1].samples[200] - Point(-1.0 + std::numbers::sqrt2 / 2, 0)) < 1e-15);
  CHECK(std::abs(curve.pieces[0].samples[200].real() + 1.7071) < 1e-4);
  CHECK(std::abs(curve.pieces[1].samples[200].real() + 0.2929) < 1e-4);
  CHECK_THROWS_AS(friendship_limit_curve(1), InvalidParameter);
}

TEST_CASE("distance to curve") {
  const auto curve = friendship_limit_curve(200);
  for (double t : {-3.3, -0.71, 0.0, 0.123, 2.5}) {
    const Point on(-1.0 + std::cosh(t) / std::numbers::sqrt2, std::sinh(t) / std::numbers::sqrt2);
    CHECK(distance_to_curve(on, curve) <= 1e-9);
  }
  // From 0 the nearest point is the vertex -1 + 1/sqrt2 (by symmetry and
  // convexity of the right branch: d^2 = (cosh t/sqrt2 - 1)^2 + sinh^2 t/2
  // is minimized at t = 0).
  CHECK(std::abs(distance_to_curve(Point(0, 0), curve) - (1.0 - std::numbers::sqrt2 / 2)) <= 1e-12);
  CHECK(std::abs(distance_to_curve(Point(-1, 0), curve) - std::numbers::sqrt2 / 2) <= 1e-12);
  LimitCurve empty;
  CHECK_THROWS_AS(distance_to_curve(Point(0, 0), empty), InvalidParameter);
}

TEST_CASE("median root distance shrinks with n") {
  const auto curve = friendship_limit_curve(4000, 5.0);
  const double m10 = median(root_distances(10, curve));
  const double m20 = median(root_distances(20, curve));
  const double m30 = median(root_distances(30, curve));
  CHECK(m30 < m10);
  CHECK(m20 < m10);
}

TEST_CASE("book limit curve") {
  const double j = book_junction_abscissa();
  CHECK(std::abs(j + 2.2071067811865475) < 1e-15);
  CHECK(std::abs(std::norm(Point(j, std::sqrt(1 - (j + 2) * (j + 2))) + 2.0) - 1.0) < 1e-15);
  // The junction satisfies both implicit equations.
  const Point junction(j, std::sqrt(1 - (j + 2) * (j + 2)));
  CHECK(std::abs(std::norm(junction + 1.0) - std::abs(junction)) < 1e-12);

  const auto curve = book_limit_curve(300);
  std::vector<std::string> labels;
  for (const auto& p : curve.pieces) labels.push_back(p.label);
  CHECK(std::find(labels.begin(), labels.end(), "circle") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "quartic-outer") != labels.end());
  for (const auto& piece : curve.pieces) {
    CAPTURE(piece.label);
    for (const auto& z : piece.samples) {
      CHECK(std::abs(piece.residual(z)) <= 1e-12 * std::max(1.0, std::norm(z)));
      CHECK(piece.window.contains(z));
    }
    if (piece.form == ImplicitForm::BookCircle) {
      for (const auto& z : piece.samples) CHECK(z.real() >= j - 1e-12);
    }
    if (piece.form == ImplicitForm::BookQuartic) {
      for (const auto& z : piece.samples) CHECK(z.real() <= j + 1e-12);
    }
    if (piece.form == ImplicitForm::FriendshipHyperbola) {
      for (const auto& z : piece.samples) CHECK(z.real() >= -1.0 - 1e-12);
    }
  }

  BookCurveOptions open;
  open.clip = false;
  const auto full = book_limit_curve(300, open);
  CHECK(distance_to_curve(Point(-3, 0), full) <= 1e-9);
  CHECK(distance_to_curve(Point(-1, 0), full) <= 1e-9);
  // Clipped: -3 is off the circle piece; nearest is the quartic at (-3 - sqrt 5)/2.
  CHECK(std::abs(distance_to_curve(Point(-3, 0), curve) - (3.0 - std::sqrt(5.0)) / 2) <= 1e-9);
  // |x+1|^2 = |x| on the negative axis: r = (-3 +- sqrt 5)/2.
  const double r1 = (-3.0 - std::sqrt(5.0)) / 2, r2 = (-3.0 + std::sqrt(5.0)) / 2;
  CHECK(distance_to_curve(Point(r1, 0), full) <= 1e-9);
  CHECK(distance_to_curve(Point(r2, 0), full) <= 1e-9);
  CHECK(distance_to_curve(Point(r1, 0), curve) <= 1e-9);
}

TEST_CASE("BKW tracer on the book family") {
  const auto traced = bkw_limit_points(book_family(), GridSpec{});
  const auto exact = book_limit_curve(3000);
  CHECK_FALSE(traced.pieces.empty());
  for (const auto& piece : traced.pieces) {
    for (const auto& z : piece.samples) CHECK(std::abs(piece.residual(z)) <= 1e-10);
  }
  // Case (ii): 0 (alpha_2 = x^2) and -1/2 (alpha_1 = 2x + 1).
  std::vector<Point> iso = traced.isolated_points;
  std::sort(iso.begin(), iso.end(), [](Point a, Point b) { return a.real() < b.real(); });
  REQUIRE(iso.size() == 2);
  CHECK(std::abs(iso[0] + 0.5) < 1e-25);
  CHECK(std::abs(iso[1]) < 1e-25);
  // Traced locus within the default window sits on the named pieces, except
  // possibly the hyperbola's left branch, which the default clip drops.
  BookCurveOptions wide;
  wide.hyperbola_min_re = -10;
  const auto exact_wide = book_limit_curve(3000, wide);
  double worst = 0;
  for (const auto& piece : traced.pieces)
    for (const auto& z : piece.samples) worst = std::max(worst, distance_to_curve(z, exact_wide));
  CHECK(worst <= 1e-6);
  (void)exact;
}
