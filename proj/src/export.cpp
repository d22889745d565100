#include "dompoly/export.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace dompoly {

std::string format_double(double v, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

std::string format_significant(double v, int digits) {
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", digits, v);
  return buf;
}

nlohmann::json polynomial_json(const IntPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return {{"coefficients", coeffs}, {"text", to_string(p)}, {"degree", p.degree()}};
}

nlohmann::json roots_json(const RootSet& roots) {
  nlohmann::json complex_roots = nlohmann::json::array();
  for (const auto& r : roots.complex_roots) {
    complex_roots.push_back({{"re", to_decimal(r.value.re, kExportDigits)},
                             {"im", to_decimal(r.value.im, kExportDigits)},
                             {"residual", format_double(r.residual)}});
  }
  nlohmann::json real_roots = nlohmann::json::array();
  for (const auto& iv : roots.real_roots) {
    real_roots.push_back({{"lo", to_string(iv.lo)},
                          {"hi", to_string(iv.hi)},
                          {"exact", iv.is_point()},
                          {"midpoint", format_double(iv.midpoint().get_d())}});
  }
  nlohmann::json integer_roots = nlohmann::json::array();
  for (const auto& r : roots.integer_roots) integer_roots.push_back(r.get_str());
  return {{"precision_bits", roots.precision_bits},
          {"digits", kExportDigits},
          {"zero_multiplicity", roots.zero_multiplicity},
          {"complex_roots", complex_roots},
          {"real_roots", real_roots},
          {"integer_roots", integer_roots}};
}

nlohmann::json curve_json(const LimitCurve& curve) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& piece : curve.pieces) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& z : piece.samples) samples.push_back({format_double(z.real()), format_double(z.imag())});
    pieces.push_back({{"label", piece.label},
                      {"min_re", format_double(piece.window.min_re)},
                      {"max_re", format_double(piece.window.max_re)},
                      {"samples", samples}});
  }
  nlohmann::json isolated = nlohmann::json::array();
  for (const auto& z : curve.isolated_points) isolated.push_back({format_double(z.real()), format_double(z.imag())});
  return {{"digits", kExportDigits}, {"pieces", pieces}, {"isolated_points", isolated}};
}

nlohmann::json equivalence_json(const EquivalenceReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"polynomial", serialize(c.polynomial)}, {"text", to_string(c.polynomial)}, {"members", c.members}});
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witness_pairs) {
    witnesses.push_back({{"first", w.first},
                         {"second", w.second},
                         {"certificate", std::string(to_string(w.certificate.kind))},
                         {"first_degrees", w.certificate.first_degrees},
                         {"second_degrees", w.certificate.second_degrees}});
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"id", s.id}, {"reason", s.reason}});
  return {{"graphs", report.graph_count()},
          {"singleton_count", report.singleton_count},
          {"non_unique", report.non_unique_count()},
          {"classes", classes},
          {"witness_pairs", witnesses},
          {"skipped", skipped}};
}

void write_roots_csv(std::ostream& out, const RootSet& roots, bool header) {
  if (header) out << "re,im,residual\n";
  for (std::size_t k = 0; k < roots.zero_multiplicity; ++k) out << "0,0,0\n";
  for (const auto& r : roots.complex_roots) {
    out << to_decimal(r.value.re, kExportDigits) << ',' << to_decimal(r.value.im, kExportDigits) << ','
        << format_double(r.residual) << '\n';
  }
}

void write_scatter_csv(std::ostream& out, const std::vector<std::pair<unsigned, RootSet>>& members) {
  out << "re,im,residual,n\n";
  for (const auto& [n, roots] : members) {
    for (std::size_t k = 0; k < roots.zero_multiplicity; ++k) out << "0,0,0," << n << '\n';
    for (const auto& r : roots.complex_roots) {
      out << to_decimal(r.value.re, kExportDigits) << ',' << to_decimal(r.value.im, kExportDigits) << ','
          << format_double(r.residual) << ',' << n << '\n';
    }
  }
}

void write_curve_csv(std::ostream& out, const LimitCurve& curve) {
  out << "re,im,piece\n";
  for (const auto& piece : curve.pieces)
    for (const auto& z : piece.samples) out << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << piece.label << '\n';
  for (const auto& z : curve.isolated_points) out << format_double(z.real()) << ',' << format_double(z.imag()) << ",isolated\n";
}

void write_equivalence_csv(std::ostream& out, const EquivalenceReport& report) {
  struct Row {
    std::size_t graphs = 0, classes = 0, non_unique = 0;
  };
  std::map<long, Row> rows;
  for (const auto& c : report.classes) {
    auto& row = rows[c.polynomial.degree()];
    row.graphs += c.members.size();
    row.classes += 1;
    if (c.members.size() > 1) row.non_unique += c.members.size();
  }
  out << "order,graphs,classes,non_unique\n";
  for (const auto& [order, row] : rows) out << order << ',' << row.graphs << ',' << row.classes << ',' << row.non_unique << '\n';
}

}  // namespace dompoly
