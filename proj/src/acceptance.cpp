#include "dompoly/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "dompoly/domination.hpp"
#include "dompoly/equivalence.hpp"
#include "dompoly/export.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/limits.hpp"
#include "dompoly/roots.hpp"

namespace dompoly {

void ParityRegistry::record(const IntPolynomial& p, const std::string& source) {
  ++count_;
  if (!mpz_odd_p(eval(p, 1).get_mpz_t())) violations_.push_back(source + ": D(1) = " + eval(p, 1).get_str());
}

namespace {

using Clock = std::chrono::steady_clock;

// Printed values of the real friendship roots, n = 2, 4, ..., 10.
const std::vector<std::pair<double, double>> kTable = {{-1.660992532, -0.1516251043},
                                                       {-1.683727169, -0.2316175850},
                                                       {-1.691458147, -0.2537459684},
                                                       {-1.695348455, -0.2641276712},
                                                       {-1.697690028, -0.2701559954}};

bool ten_digits(double value, double printed) {
  const double e = std::floor(std::log10(std::fabs(printed)));
  return std::fabs(value - printed) <= 0.5 * std::pow(10.0, e - 9);
}

std::string digits10(double v) { return format_significant(v, 10); }

class Runner {
 public:
  explicit Runner(const AcceptanceOptions& options) : options_(options) {}

  std::vector<CheckResult> run() {
    std::vector<CheckResult> results;
    // Parity runs last so it sees every polynomial, but reports in order.
    for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 10, 9}) results.push_back(timed(id));
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    if (options_.on_result)
      for (const auto& r : results) options_.on_result(r);
    return results;
  }

 private:
  const AcceptanceOptions& options_;
  ParityRegistry parity_;
  std::map<unsigned, RootSet> friendship_roots_;

  IntPolynomial friendship(unsigned n) {
    auto p = family_poly({FamilyKind::Friendship, n});
    parity_.record(p, "friendship:" + std::to_string(n));
    return p;
  }

  IntPolynomial brute(const Graph& g, const std::string& source) {
    auto p = brute_force_poly(g);
    parity_.record(p, source);
    return p;
  }

  const RootSet& friendship_roots(unsigned n) {
    auto it = friendship_roots_.find(n);
    if (it == friendship_roots_.end()) it = friendship_roots_.emplace(n, all_roots(friendship(n))).first;
    return it->second;
  }

  CheckResult timed(int id) {
    CheckResult r;
    r.id = id;
    const auto start = Clock::now();
    try {
      dispatch(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
      r.passed = false;
      r.detail += "; over the " + format_double(r.limit_seconds, 3) + " s limit";
    }
    return r;
  }

  void dispatch(CheckResult& r) {
    switch (r.id) {
      case 1: return table_reproduction(r);
      case 2: return closed_vs_brute(r);
      case 3: return recurrences(r);
      case 4: return friendship_book_equivalence(r);
      case 5: return real_root_counts(r);
      case 6: return limit_curve(r);
      case 7: return corona_roots(r);
      case 8: return conjecture_scan(r);
      case 9: return parity(r);
      case 10: return exports(r);
    }
  }

  void table_reproduction(CheckResult& r) {
    r.name = "table-reproduction";
    r.claim = "real domination roots of F_n, n <= 10, to ten significant digits";
    r.limit_seconds = 5;
    r.passed = true;
    std::ostringstream detail;
    for (unsigned n = 1; n <= 10; ++n) {
      const auto real = real_roots_exact(friendship(n));
      bool ok;
      if (n % 2 == 1) {
        ok = real.size() == 1 && real[0].is_point() && real[0].lo == 0;
      } else {
        const auto [a, b] = kTable[n / 2 - 1];
        ok = real.size() == 3 && ten_digits(real[0].midpoint().get_d(), a) &&
             ten_digits(real[1].midpoint().get_d(), b) && real[2].is_point() && real[2].lo == 0;
        if (real.size() == 3)
          detail << "n=" << n << ": " << digits10(real[0].midpoint().get_d()) << ", "
                 << digits10(real[1].midpoint().get_d()) << ", 0; ";
      }
      if (!ok) {
        r.passed = false;
        detail << "n=" << n << " mismatch; ";
      }
    }
    detail << "odd n: {0}";
    r.detail = detail.str();
  }

  void closed_vs_brute(CheckResult& r) {
    r.name = "closed-form-vs-brute-force";
    r.claim = "closed forms for D(F_n), D(B_n) and D(B_n/v)";
    r.limit_seconds = 30;
    r.passed = true;
    std::size_t compared = 0;
    const std::vector<std::pair<FamilyKind, std::size_t>> ranges = {
        {FamilyKind::Friendship, 6}, {FamilyKind::Book, 5}, {FamilyKind::BookContracted, 6}};
    for (const auto& [kind, n_max] : ranges) {
      for (std::size_t n = 1; n <= n_max; ++n) {
        const FamilySpec spec{kind, n};
        const auto closed = family_poly(spec);
        parity_.record(closed, to_string(spec));
        const auto enumerated = brute(build_family(spec), to_string(spec) + " brute");
        ++compared;
        if (closed != enumerated) {
          r.passed = false;
          r.detail += to_string(spec) + " differs; ";
        }
      }
    }
    r.detail += std::to_string(compared) + " instances compared coefficient by coefficient";
  }

  void recurrences(CheckResult& r) {
    r.name = "recurrence-identities";
    r.claim = "vertex recurrence and G (.) u recurrence";
    r.passed = true;
    std::mt19937_64 rng(20240611);
    constexpr int kTrials = 200;
    int failures = 0;
    for (int trial = 0; trial < kTrials; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      std::vector<Edge> edges;
      // Spanning tree first, so every graph is connected.
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) edges.emplace_back(u, v);
      const Graph g(n, edges);
      const Vertex u = rng() % n;
      const std::string source = "random graph " + std::to_string(trial) + " (" + write_graph6(g) + ")";
      const auto d = brute(g, source);
      const auto vertex = recurrence_poly_vertex(g, u);
      const auto odot_form = recurrence_poly_odot(g, u);
      parity_.record(vertex, source + " vertex recurrence");
      parity_.record(odot_form, source + " odot recurrence");
      if (vertex != d || odot_form != d) {
        ++failures;
        r.findings.push_back("recurrence mismatch on " + write_graph6(g) + " at u=" + std::to_string(u));
      }
    }
    r.passed = failures == 0;
    r.detail = std::to_string(kTrials) + " random connected graphs of order <= 8, " + std::to_string(failures) +
               " mismatches";
  }

  void friendship_book_equivalence(CheckResult& r) {
    r.name = "friendship-not-unique";
    r.claim = "D(F_n) = D(B_n/v) with F_n and B_n/v non-isomorphic, n >= 2";
    r.limit_seconds = 5;
    r.passed = true;
    std::map<std::string, std::size_t> kinds;
    for (std::size_t n = 2; n <= 100; ++n) {
      const auto w = verify_friendship_not_unique(n);
      parity_.record(w.polynomial, "friendship:" + std::to_string(n) + " vs book-contracted");
      ++kinds[std::string(to_string(w.certificate.kind))];
      if (!w.polynomials_equal || !w.certificate.certifies_non_isomorphic()) {
        r.passed = false;
        r.detail += "n=" + std::to_string(n) + " fails; ";
      }
    }
    r.detail += "n = 2..100 equal; certificates:";
    for (const auto& [k, c] : kinds) r.detail += " " + k + " x" + std::to_string(c);
  }

  void real_root_counts(CheckResult& r) {
    r.name = "friendship-real-root-counts";
    r.claim = "F_n has no nonzero real root for odd n and exactly two, in (-2, 0), for even n";
    r.passed = true;
    for (unsigned n = 1; n <= 15; ++n) {
      const auto p = friendship(n);
      const auto real = real_roots_exact(p);
      const auto inside = count_real_roots_in(p, -2, 0);
      const std::size_t expected = n % 2 == 1 ? 1 : 3;
      bool ok = real.size() == expected && inside.count == expected - 1 && !inside.lower_is_root && eval(p, -1) != 0;
      if (!ok) {
        r.passed = false;
        r.detail += "n=" + std::to_string(n) + " has " + std::to_string(real.size()) + " real roots; ";
      }
    }
    r.detail += "odd n <= 15: one real root; even n <= 14: three, two certified in (-2, 0); D(F_n, -1) != 0";
  }

  void limit_curve(CheckResult& r) {
    r.name = "limit-curve-approach";
    r.claim = "roots of F_n approach the hyperbola (Re x + 1)^2 - (Im x)^2 = 1/2 plus the point 0";
    r.passed = true;
    const auto curve = friendship_limit_curve(4000, 5.0);
    std::vector<double> maxima, medians;
    for (unsigned n : {10u, 20u, 30u}) {
      std::vector<double> d;
      for (const auto& root : friendship_roots(n).complex_roots) {
        const Point z = root.value.to_double();
        if (std::abs(z) < 0.15) continue;
        d.push_back(distance_to_curve(z, curve));
      }
      std::sort(d.begin(), d.end());
      maxima.push_back(d.back());
      medians.push_back(d[d.size() / 2]);
    }
    const bool decreasing = maxima[0] > maxima[1] && maxima[1] > maxima[2];
    std::ostringstream detail;
    detail << "max distance n=10,20,30: " << digits10(maxima[0]) << ", " << digits10(maxima[1]) << ", "
           << digits10(maxima[2]) << (decreasing ? " (decreasing)" : " (not decreasing)");

    const auto traced = bkw_limit_points(friendship_family(), GridSpec{});
    double worst = 0;
    std::size_t samples = 0;
    for (const auto& piece : traced.pieces)
      for (const auto& z : piece.samples) {
        worst = std::max(worst, distance_to_curve(z, curve));
        ++samples;
      }
    const bool tracer_ok = samples > 0 && worst <= 1e-6;
    const bool isolated_ok = traced.isolated_points.size() == 1 && std::abs(traced.isolated_points[0]) < 1e-12;
    detail << "; tracer " << samples << " samples, worst distance " << format_double(worst, 3)
           << "; isolated points " << traced.isolated_points.size() << (isolated_ok ? " = {0}" : " != {0}");
    r.detail = detail.str();
    r.passed = decreasing && tracer_ok && isolated_ok;
    if (!decreasing) {
      r.findings.push_back("the outermost conjugate pair of F_n roots moves away from the curve as n grows; "
                           "median distance n=10,20,30: " +
                           digits10(medians[0]) + ", " + digits10(medians[1]) + ", " + digits10(medians[2]));
    }
  }

  bool real_roots_are(const IntPolynomial& p, const std::vector<long>& expected) {
    const auto real = real_roots_exact(p);
    if (real.size() != expected.size()) return false;
    for (std::size_t i = 0; i < real.size(); ++i)
      if (!real[i].is_point() || real[i].lo != expected[i]) return false;
    return true;
  }

  void corona_roots(CheckResult& r) {
    r.name = "corona-real-roots";
    r.claim = "real roots of B_n o F_n (odd n) and of iterated coronas with K_2m, K_2m+1 and B_2";
    r.passed = true;
    std::size_t instances = 0;
    auto expect = [&](const CoronaFamily& fam, const std::vector<long>& roots, const std::string& label) {
      const auto p = corona_family_poly(fam);
      parity_.record(p, label);
      ++instances;
      if (!real_roots_are(p, roots)) {
        r.passed = false;
        r.detail += label + " has other real roots; ";
      }
    };
    for (std::size_t n : {1u, 3u}) {
      expect({CoronaKind::Friendship, 2 * n + 2, n, 1}, {-2, 0}, "B_" + std::to_string(n) + " o F_" + std::to_string(n));
    }
    for (std::size_t base = 1; base <= 3; ++base) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t depth = 1; depth <= 2; ++depth) {
          const std::string tail = " (|G|=" + std::to_string(base) + ", depth " + std::to_string(depth) + ")";
          expect({CoronaKind::Clique, base, 2 * m, depth}, {0}, "G o K_" + std::to_string(2 * m) + tail);
          expect({CoronaKind::Clique, base, 2 * m + 1, depth}, {-2, 0}, "G o K_" + std::to_string(2 * m + 1) + tail);
        }
      }
      for (std::size_t depth = 1; depth <= 2; ++depth)
        expect({CoronaKind::Book2, base, 0, depth}, {0}, "G o B_2 (|G|=" + std::to_string(base) + ")");
    }
    // The companion claim for even n, B_{n+1} o F_n, is not part of the
    // criterion; its real roots are reported when they exceed {-2, 0}.
    for (std::size_t n : {2u, 4u}) {
      const auto p = corona_family_poly({CoronaKind::Friendship, 2 * n + 4, n, 1});
      parity_.record(p, "B_" + std::to_string(n + 1) + " o F_" + std::to_string(n));
      const auto real = real_roots_exact(p);
      if (real.size() > 2) {
        std::string list;
        for (const auto& iv : real) list += (list.empty() ? "" : ", ") + digits10(iv.midpoint().get_d());
        r.findings.push_back("B_" + std::to_string(n + 1) + " o F_" + std::to_string(n) + " has real roots " + list);
      }
    }
    r.detail += std::to_string(instances) + " coronas isolated exactly";
  }

  void conjecture_scan(CheckResult& r) {
    r.name = "integer-root-scan";
    r.claim = "integer domination roots lie in {-2, 0}";
    r.limit_seconds = 120;
    r.passed = true;
    std::size_t graphs = 0, with_minus_two = 0;
    for (int order = 1; order <= 6; ++order) {
      const auto path = options_.catalog_dir / ("order" + std::to_string(order) + ".g6");
      for (const auto& entry : read_graph6_catalog(path.string())) {
        ++graphs;
        const auto p = brute(entry.graph, entry.id);
        const auto roots = integer_roots(p);
        for (const auto& root : roots) {
          if (root == -2) ++with_minus_two;
          if (root != 0 && root != -2) {
            // Integer roots are confirmed by exact evaluation, so any
            // counterexample is certified.
            r.findings.push_back("FINDING " + entry.id + " (" + write_graph6(entry.graph) + ") has integer root " +
                                 root.get_str());
            r.passed = false;
          }
        }
      }
    }
    r.detail = std::to_string(graphs) + " catalog graphs, " + std::to_string(with_minus_two) + " with root -2";
  }

  void parity(CheckResult& r) {
    r.name = "parity";
    r.claim = "D(G, 1) is odd";
    r.passed = parity_.count() > 0 && parity_.violations().empty();
    r.detail = std::to_string(parity_.count()) + " polynomials, " + std::to_string(parity_.violations().size()) +
               " with even D(1)";
    for (const auto& v : parity_.violations()) r.findings.push_back(v);
  }

  void exports(CheckResult& r) {
    r.name = "exported-data";
    r.claim = "root scatters and limiting curves as data files";
    namespace fs = std::filesystem;
    fs::create_directories(options_.export_dir);
    const fs::path dir = options_.export_dir;
    std::vector<std::string> problems;

    std::vector<std::pair<unsigned, RootSet>> friendship_members, book_members;
    nlohmann::json friendship_doc = nlohmann::json::array(), book_doc = nlohmann::json::array();
    std::size_t friendship_expected = 0, book_expected = 0;
    for (unsigned n = 1; n <= 30; ++n) {
      const auto& fr = friendship_roots(n);
      friendship_members.emplace_back(n, fr);
      friendship_doc.push_back({{"n", n}, {"polynomial", polynomial_json(friendship(n))}, {"roots", roots_json(fr)}});
      friendship_expected += 2 * n + 1;
      const auto b = family_poly({FamilyKind::Book, n});
      parity_.record(b, "book:" + std::to_string(n));
      auto br = all_roots(b);
      book_doc.push_back({{"n", n}, {"polynomial", polynomial_json(b)}, {"roots", roots_json(br)}});
      book_members.emplace_back(n, std::move(br));
      book_expected += 2 * n + 2;
    }
    const auto friendship_curve = friendship_limit_curve(1000);
    const auto traced = bkw_limit_points(friendship_family(), GridSpec{});
    const auto book_curve = book_limit_curve(1000);

    auto write = [&](const std::string& name, const auto& body) {
      std::ofstream out(dir / name);
      body(out);
      if (!out) problems.push_back("cannot write " + name);
    };
    write("friendship_roots.csv", [&](std::ostream& o) { write_scatter_csv(o, friendship_members); });
    write("friendship_roots.json", [&](std::ostream& o) { o << friendship_doc.dump(1) << '\n'; });
    write("friendship_curve.csv", [&](std::ostream& o) { write_curve_csv(o, friendship_curve); });
    write("friendship_curve.json", [&](std::ostream& o) { o << curve_json(friendship_curve).dump(1) << '\n'; });
    write("friendship_traced.csv", [&](std::ostream& o) { write_curve_csv(o, traced); });
    write("book_roots.csv", [&](std::ostream& o) { write_scatter_csv(o, book_members); });
    write("book_roots.json", [&](std::ostream& o) { o << book_doc.dump(1) << '\n'; });
    write("book_curve.csv", [&](std::ostream& o) { write_curve_csv(o, book_curve); });
    write("book_curve.json", [&](std::ostream& o) { o << curve_json(book_curve).dump(1) << '\n'; });

    // Read everything back.
    auto csv_rows = [&](const std::string& name, std::size_t columns) {
      std::ifstream in(dir / name);
      std::string line;
      std::size_t rows = 0;
      std::getline(in, line);
      while (std::getline(in, line)) {
        if (static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) != columns - 1)
          problems.push_back(name + ": malformed row");
        ++rows;
      }
      return rows;
    };
    if (csv_rows("friendship_roots.csv", 4) != friendship_expected) problems.push_back("friendship scatter row count");
    if (csv_rows("book_roots.csv", 4) != book_expected) problems.push_back("book scatter row count");
    if (csv_rows("friendship_curve.csv", 3) != friendship_curve.sample_count() + 1)
      problems.push_back("friendship curve row count");
    if (csv_rows("book_curve.csv", 3) != book_curve.sample_count()) problems.push_back("book curve row count");

    std::ifstream roots_in(dir / "friendship_roots.json");
    const auto doc = nlohmann::json::parse(roots_in);
    for (const auto& entry : doc) {
      const unsigned n = entry.at("n").get<unsigned>();
      const auto& real = entry.at("roots").at("real_roots");
      const std::size_t expected = n % 2 == 1 ? 1 : 3;
      if (real.size() != expected) problems.push_back("friendship:" + std::to_string(n) + " exported real roots");
      if (n % 2 == 0 && n <= 10 && real.size() == 3) {
        const auto [a, b] = kTable[n / 2 - 1];
        if (!ten_digits(std::stod(real[0].at("midpoint").get<std::string>()), a) ||
            !ten_digits(std::stod(real[1].at("midpoint").get<std::string>()), b))
          problems.push_back("friendship:" + std::to_string(n) + " exported midpoints");
      }
    }
    std::ifstream curve_in(dir / "friendship_curve.json");
    const auto curve_doc = nlohmann::json::parse(curve_in);
    double worst = 0;
    for (const auto& piece : curve_doc.at("pieces"))
      for (const auto& s : piece.at("samples")) {
        const double re = std::stod(s[0].get<std::string>()), im = std::stod(s[1].get<std::string>());
        const double scale = std::max(1.0, re * re + im * im);
        worst = std::max(worst, std::abs((re + 1) * (re + 1) - im * im - 0.5) / scale);
      }
    if (worst > 1e-12) problems.push_back("exported curve residual " + format_double(worst, 3));

    r.passed = problems.empty();
    r.detail = "9 files in " + dir.string();
    for (const auto& p : problems) r.detail += "; " + p;
  }
};

}  // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options) { return Runner(options).run(); }

std::string format_result(const CheckResult& result) {
  std::ostringstream out;
  out << (result.passed ? "PASS" : "FAIL") << "  criterion " << result.id << "  " << result.name << "  ("
      << std::fixed;
  out.precision(2);
  out << result.seconds << " s)\n";
  out << "      claim: " << result.claim << '\n';
  out << "      " << result.detail << '\n';
  for (const auto& f : result.findings) out << "      finding: " << f << '\n';
  return out.str();
}

}  // namespace dompoly
