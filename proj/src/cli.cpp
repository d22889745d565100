#include "dompoly/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dompoly/acceptance.hpp"
#include "dompoly/domination.hpp"
#include "dompoly/equivalence.hpp"
#include "dompoly/error.hpp"
#include "dompoly/export.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/limits.hpp"
#include "dompoly/roots.hpp"

namespace dompoly {

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3, kDisagree = 4, kOther = 5 };

class UsageError : public Error {
 public:
  using Error::Error;
};

class PathsDisagree : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string label;
  std::optional<FamilySpec> family;
  std::optional<Graph> graph;
  std::optional<IntPolynomial> coefficients;
};

struct Config {
  std::string family;
  std::string graph6;
  std::string graph6_file;
  std::string coeffs;
  std::string method;
  unsigned precision = kDefaultPrecisionBits;
  double tol = 1e-20;
  bool real_only = false;
  std::string format = "text";
  std::string output;
  unsigned n_max = 30;
  std::size_t samples = 400;
  std::string grid;
  std::string export_format;
  std::string output_dir = ".";
  std::vector<std::string> catalogs;
  bool timing = false;
};

std::string sig10(double v) { return format_significant(v, 10); }

std::vector<Input> collect_inputs(const Config& cfg) {
  std::vector<Input> inputs;
  const int given = !cfg.family.empty() + !cfg.graph6.empty() + !cfg.graph6_file.empty() + !cfg.coeffs.empty();
  if (given != 1) throw UsageError("give exactly one of --family, --graph6, --graph6-file, --coeffs");
  if (!cfg.family.empty()) {
    const auto spec = parse_family(cfg.family);
    inputs.push_back({to_string(spec), spec, std::nullopt, std::nullopt});
  } else if (!cfg.graph6.empty()) {
    inputs.push_back({cfg.graph6, std::nullopt, parse_graph6(cfg.graph6), std::nullopt});
  } else if (!cfg.graph6_file.empty()) {
    for (auto& entry : read_graph6_catalog(cfg.graph6_file)) inputs.push_back({entry.id, std::nullopt, entry.graph, std::nullopt});
    if (inputs.empty()) throw ParseError("no graphs in " + cfg.graph6_file, 0);
  } else {
    inputs.push_back({cfg.coeffs, std::nullopt, std::nullopt, parse_coefficients(cfg.coeffs)});
  }
  return inputs;
}

struct PathResult {
  std::string method;
  IntPolynomial polynomial;
};

std::vector<PathResult> compute_paths(const Input& in, const std::string& method) {
  if (in.coefficients) {
    if (!method.empty() && method != "closed") throw UsageError("--coeffs input takes no --method");
    return {{"given", *in.coefficients}};
  }
  std::vector<PathResult> paths;
  const std::string m = method.empty() ? (in.family ? "closed" : "brute") : method;
  auto graph = [&]() { return in.graph ? *in.graph : build_family(*in.family); };
  auto want = [&](const std::string& name) { return m == name || m == "all"; };
  if (want("closed") && in.family) paths.push_back({"closed", family_poly(*in.family)});
  if (m == "closed" && !in.family) throw UsageError("--method closed needs --family");
  if (want("brute")) {
    const Graph g = graph();
    paths.push_back({"brute", brute_force_poly(g)});
  }
  if (want("recurrence")) {
    const Graph g = graph();
    if (g.order() == 0) throw UsageError("recurrence needs a nonempty graph");
    paths.push_back({"recurrence-vertex", recurrence_poly_vertex(g, 0)});
    paths.push_back({"recurrence-odot", recurrence_poly_odot(g, 0)});
  }
  if (paths.empty()) throw UsageError("unknown --method '" + m + "' (brute, recurrence, closed, all)");
  return paths;
}

IntPolynomial single_poly(const Input& in, const std::string& method) {
  const auto paths = compute_paths(in, method);
  for (const auto& p : paths)
    if (p.polynomial != paths.front().polynomial) throw PathsDisagree(in.label + ": computation paths disagree");
  return paths.front().polynomial;
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv") {
    throw UsageError("unknown --format '" + format + "' (text, json, csv)");
  }
}

int cmd_poly(const Config& cfg, std::ostream& out) {
  check_format(cfg.format);
  bool agree_all = true;
  nlohmann::json doc = nlohmann::json::array();
  if (cfg.format == "csv") out << "input,method,power,coefficient\n";
  const auto inputs = collect_inputs(cfg);
  const bool labelled = inputs.size() > 1;
  for (const auto& in : inputs) {
    const auto paths = compute_paths(in, cfg.method);
    bool agree = true;
    for (const auto& p : paths) agree = agree && p.polynomial == paths.front().polynomial;
    agree_all = agree_all && agree;
    const bool several = paths.size() > 1;
    if (cfg.format == "text") {
      if (labelled) out << in.label << ":\n";
      for (const auto& p : paths) {
        if (labelled) out << "  ";
        if (several) out << p.method << ": ";
        out << to_string(p.polynomial) << '\n';
      }
      if (several) out << (labelled ? "  " : "") << "verdict: " << (agree ? "AGREE" : "DISAGREE") << '\n';
    } else if (cfg.format == "json") {
      nlohmann::json entry{{"input", in.label}};
      nlohmann::json jp = nlohmann::json::object();
      for (const auto& p : paths) jp[p.method] = polynomial_json(p.polynomial);
      entry["paths"] = jp;
      if (several) entry["verdict"] = agree ? "AGREE" : "DISAGREE";
      doc.push_back(entry);
    } else {
      for (const auto& p : paths)
        for (std::size_t i = 0; i < p.polynomial.coefficients().size(); ++i)
          out << in.label << ',' << p.method << ',' << i << ',' << p.polynomial.coefficients()[i].get_str() << '\n';
    }
  }
  if (cfg.format == "json") out << (doc.size() == 1 ? doc[0] : doc).dump(2) << '\n';
  return agree_all ? kOk : kDisagree;
}

void write_real_roots_text(std::ostream& out, const std::vector<RationalInterval>& real) {
  out << "real roots: " << real.size() << '\n';
  for (const auto& iv : real) {
    if (iv.is_point()) {
      out << "  " << to_string(iv.lo) << "  exact\n";
    } else {
      out << "  " << sig10(iv.midpoint().get_d()) << "  in [" << to_string(iv.lo) << ", " << to_string(iv.hi)
          << "]\n";
    }
  }
}

int cmd_roots(const Config& cfg, std::ostream& out) {
  check_format(cfg.format);
  if (cfg.precision < kMinPrecisionBits) throw UsageError("--precision must be at least 53");
  SolverOptions options;
  options.precision_bits = cfg.precision;
  options.tolerance = cfg.tol;
  const auto inputs = collect_inputs(cfg);
  nlohmann::json doc = nlohmann::json::array();
  bool header = true;
  if (cfg.format == "csv" && cfg.real_only) out << "lo,hi,midpoint,exact\n";
  for (const auto& in : inputs) {
    const auto p = single_poly(in, cfg.method);
    if (p.degree() < 1) throw UsageError(in.label + ": polynomial has no roots");
    const bool labelled = inputs.size() > 1;
    if (cfg.real_only) {
      const auto real = real_roots_exact(p);
      if (cfg.format == "text") {
        if (labelled) out << in.label << ":\n";
        write_real_roots_text(out, real);
      } else if (cfg.format == "csv") {
        for (const auto& iv : real)
          out << to_string(iv.lo) << ',' << to_string(iv.hi) << ',' << format_double(iv.midpoint().get_d()) << ','
              << (iv.is_point() ? 1 : 0) << '\n';
      } else {
        RootSet rs;
        rs.real_roots = real;
        rs.integer_roots = integer_roots(p);
        rs.zero_multiplicity = p.valuation();
        rs.precision_bits = cfg.precision;
        auto j = roots_json(rs);
        j.erase("complex_roots");
        doc.push_back({{"input", in.label}, {"polynomial", polynomial_json(p)}, {"roots", j}});
      }
      continue;
    }
    const auto rs = all_roots(p, options);
    if (cfg.format == "text") {
      if (labelled) out << in.label << ":\n";
      out << "polynomial: " << to_string(p) << '\n';
      out << "zero multiplicity: " << rs.zero_multiplicity << '\n';
      out << "complex roots: " << rs.complex_roots.size() << '\n';
      for (const auto& r : rs.complex_roots) {
        const std::string im = to_decimal(r.value.im, 20);
        out << "  " << to_decimal(r.value.re, 20) << (im.front() == '-' ? " - " : " + ")
            << (im.front() == '-' ? im.substr(1) : im) << "i  residual " << format_double(r.residual, 3) << '\n';
      }
      write_real_roots_text(out, rs.real_roots);
      out << "integer roots:";
      for (const auto& r : rs.integer_roots) out << ' ' << r.get_str();
      out << '\n';
    } else if (cfg.format == "csv") {
      write_roots_csv(out, rs, header);
      header = false;
    } else {
      doc.push_back({{"input", in.label}, {"polynomial", polynomial_json(p)}, {"roots", roots_json(rs)}});
    }
  }
  if (cfg.format == "json") out << (doc.size() == 1 ? doc[0] : doc).dump(2) << '\n';
  return kOk;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  if (text.empty()) return grid;
  std::vector<double> v;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ParseError("--grid field is not a number: '" + field + "'", 0);
    }
  }
  if (v.size() != 6) throw ParseError("--grid wants re_min,re_max,im_min,im_max,re_steps,im_steps", 0);
  if (v[4] < 1 || v[5] < 1) throw UsageError("--grid steps must be positive");
  return {v[0], v[1], v[2], v[3], static_cast<std::size_t>(v[4]), static_cast<std::size_t>(v[5])};
}

int cmd_limits(const Config& cfg, std::ostream& out) {
  std::string name = cfg.family;
  unsigned n_max = cfg.n_max;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    n_max = static_cast<unsigned>(parse_family(name).parameter);
    name = name.substr(0, colon);
  }
  if (name != "friendship" && name != "book") throw UsageError("limits supports --family friendship or book");
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
  if (!cfg.export_format.empty() && cfg.export_format != "csv" && cfg.export_format != "json") {
    throw UsageError("unknown --export '" + cfg.export_format + "' (csv, json)");
  }
  const bool friendship = name == "friendship";
  const GridSpec grid = parse_grid(cfg.grid);
  const auto family = friendship ? friendship_family() : book_family();
  const auto curve = friendship ? friendship_limit_curve(cfg.samples, 5.0) : book_limit_curve(cfg.samples);
  const auto traced = bkw_limit_points(family, grid);

  std::vector<std::pair<unsigned, RootSet>> members;
  out << "family " << name << ", n = 1.." << n_max << '\n';
  out << "n  max|z|  max-distance  median-distance\n";
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto p = family_poly({friendship ? FamilyKind::Friendship : FamilyKind::Book, n});
    auto rs = all_roots(p);
    double max_mod = 0;
    std::vector<double> d;
    for (const auto& r : rs.complex_roots) {
      const Point z = r.value.to_double();
      max_mod = std::max(max_mod, std::abs(z));
      if (std::abs(z) < 0.15) continue;
      d.push_back(distance_to_curve(z, curve));
    }
    std::sort(d.begin(), d.end());
    out << n << "  " << sig10(max_mod) << "  " << (d.empty() ? "-" : sig10(d.back())) << "  "
        << (d.empty() ? "-" : sig10(d[d.size() / 2])) << '\n';
    members.emplace_back(n, std::move(rs));
  }
  std::size_t traced_samples = traced.sample_count();
  double worst = 0;
  for (const auto& piece : traced.pieces)
    for (const auto& z : piece.samples) worst = std::max(worst, distance_to_curve(z, curve));
  out << "traced locus: " << traced_samples << " samples in " << traced.pieces.size()
      << " pieces, max distance to named curve " << format_double(worst, 3) << '\n';
  out << "isolated limit points:";
  for (const auto& z : traced.isolated_points) out << ' ' << format_double(z.real(), 10);
  out << '\n';

  if (!cfg.export_format.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);
    const fs::path dir = cfg.output_dir;
    auto open = [&](const std::string& file) {
      std::ofstream f(dir / file);
      if (!f) throw Error("cannot write " + (dir / file).string());
      out << "wrote " << (dir / file).string() << '\n';
      return f;
    };
    if (cfg.export_format == "csv") {
      auto a = open(name + "_roots.csv");
      write_scatter_csv(a, members);
      auto b = open(name + "_curve.csv");
      write_curve_csv(b, curve);
      auto c = open(name + "_traced.csv");
      write_curve_csv(c, traced);
    } else {
      nlohmann::json scatter = nlohmann::json::array();
      for (const auto& [n, rs] : members) scatter.push_back({{"n", n}, {"roots", roots_json(rs)}});
      open(name + "_roots.json") << scatter.dump(1) << '\n';
      open(name + "_curve.json") << curve_json(curve).dump(1) << '\n';
      open(name + "_traced.json") << curve_json(traced).dump(1) << '\n';
    }
  }
  return kOk;
}

int cmd_equiv(const Config& cfg, std::ostream& out) {
  check_format(cfg.format);
  if (cfg.catalogs.empty()) throw UsageError("equiv needs at least one --catalog");
  std::vector<CatalogEntry> catalog;
  for (const auto& path : cfg.catalogs)
    for (auto& e : read_graph6_catalog(path)) catalog.push_back(std::move(e));

  if (!cfg.graph6.empty()) {
    const Graph g = parse_graph6(cfg.graph6);
    const auto verdict = is_d_unique_within(g, catalog);
    if (cfg.format == "json") {
      out << nlohmann::json{{"graph", cfg.graph6},
                            {"polynomial", polynomial_json(brute_force_poly(g))},
                            {"unique", verdict.unique},
                            {"witnesses", verdict.witnesses},
                            {"uncertified", verdict.uncertified}}
                 .dump(2)
          << '\n';
    } else {
      out << cfg.graph6 << ": " << (verdict.unique ? "D-unique" : "not D-unique") << " within the catalog\n";
      for (const auto& w : verdict.witnesses) out << "  witness " << w << '\n';
      for (const auto& u : verdict.uncertified) out << "  same polynomial, no certificate: " << u << '\n';
    }
    return kOk;
  }

  const auto report = partition_catalog(catalog);
  if (cfg.format == "json") {
    out << equivalence_json(report).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_equivalence_csv(out, report);
  } else {
    out << report.graph_count() << " graphs, " << report.classes.size() << " classes, " << report.non_unique_count()
        << " not D-unique\n";
    for (const auto& c : report.classes) {
      if (c.members.size() < 2) continue;
      out << "  " << to_string(c.polynomial) << ":";
      for (const auto& m : c.members) out << ' ' << m;
      out << '\n';
    }
    for (const auto& w : report.witness_pairs) out << "  " << w.first << " ~ " << w.second << "  " << to_string(w.certificate.kind) << '\n';
    for (const auto& s : report.skipped) out << "  skipped " << s.id << ": " << s.reason << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  AcceptanceOptions options;
  if (!cfg.output_dir.empty() && cfg.output_dir != ".") options.export_dir = cfg.output_dir;
  const auto results = run_acceptance(options);
  const CheckResult* first_failure = nullptr;
  if (cfg.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json j{{"criterion", r.id}, {"name", r.name}, {"claim", r.claim}, {"passed", r.passed},
                       {"detail", r.detail}, {"findings", r.findings}};
      if (cfg.timing) j["seconds"] = r.seconds;
      doc.push_back(j);
    }
    out << doc.dump(2) << '\n';
  }
  for (const auto& r : results) {
    if (!r.passed && !first_failure) first_failure = &r;
    if (cfg.format == "json") continue;
    std::string line = format_result(r);
    if (!cfg.timing) {
      // Drop the "(t s)" field so repeated runs print identical text.
      const auto open = line.find("  (");
      const auto close = line.find(" s)\n");
      if (open != std::string::npos && close != std::string::npos) line.erase(open, close + 3 - open);
    }
    out << line;
  }
  if (first_failure) {
    err << "first failing check: criterion " << first_failure->id << " (" << first_failure->name << ")\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination polynomials: computation, roots, limit curves, equivalence classes"};
  app.name("dompoly");
  app.require_subcommand(1);
  Config cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "graph family name:n (friendship, book, book-contracted, complete, "
                                             "empty, cycle, path, star)");
    sub->add_option("--graph6", cfg.graph6, "graph in graph6 encoding");
    sub->add_option("--graph6-file", cfg.graph6_file, "file with one graph6 graph per line");
    sub->add_option("--coeffs", cfg.coeffs, "polynomial coefficients from x^0, comma separated");
    sub->add_option("--method", cfg.method, "brute, recurrence, closed or all");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv");
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };

  auto* poly = app.add_subcommand("poly", "domination polynomial of a graph or family");
  add_input(poly);
  add_output(poly);

  auto* roots = app.add_subcommand("roots", "complex, real and integer roots");
  add_input(roots);
  add_output(roots);
  roots->add_option("--precision", cfg.precision, "working precision in bits")->envname("DOMPOLY_PRECISION");
  roots->add_option("--tol", cfg.tol, "normalized residual tolerance");
  roots->add_flag("--real-only", cfg.real_only, "only exact real-root isolation");

  auto* limits = app.add_subcommand("limits", "limit-of-roots curves and root scatter");
  limits->add_option("--family", cfg.family, "friendship or book")->required();
  limits->add_option("--n-max", cfg.n_max, "largest family member");
  limits->add_option("--samples", cfg.samples, "samples per curve piece");
  limits->add_option("--grid", cfg.grid, "re_min,re_max,im_min,im_max,re_steps,im_steps");
  limits->add_option("--export", cfg.export_format, "csv or json data files");
  limits->add_option("--output-dir", cfg.output_dir, "directory for exported files");
  limits->add_option("--output", cfg.output, "write the report to this file");

  auto* equiv = app.add_subcommand("equiv", "D-equivalence classes of graph6 catalogs");
  equiv->add_option("--catalog", cfg.catalogs, "graph6 catalog file (repeatable)");
  equiv->add_option("--graph6", cfg.graph6, "decide D-uniqueness of this graph within the catalog");
  add_output(equiv);

  auto* verify = app.add_subcommand("verify", "run every acceptance check");
  verify->add_option("--output-dir", cfg.output_dir, "directory for exported data files");
  verify->add_option("--format", cfg.format, "text or json");
  verify->add_option("--output", cfg.output, "write the table to this file");
  verify->add_flag("--timing", cfg.timing, "include wall-clock seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kOther;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    if (*poly) return cmd_poly(cfg, sink);
    if (*roots) return cmd_roots(cfg, sink);
    if (*limits) return cmd_limits(cfg, sink);
    if (*equiv) return cmd_equiv(cfg, sink);
    if (*verify) return cmd_verify(cfg, sink, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CapExceeded& e) {
    err << "size cap exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const PathsDisagree& e) {
    err << "error: " << e.what() << '\n';
    return kDisagree;
  } catch (const InvalidParameter& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}

}  // namespace dompoly
