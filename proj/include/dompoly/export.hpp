#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dompoly/equivalence.hpp"
#include "dompoly/limits.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/roots.hpp"

namespace dompoly {

/// Significant digits used for every decimal field.
inline constexpr int kExportDigits = 17;

nlohmann::json polynomial_json(const IntPolynomial& p);
/// Real, complex and integer roots; intervals as "p/q" strings.
nlohmann::json roots_json(const RootSet& roots);
nlohmann::json curve_json(const LimitCurve& curve);
nlohmann::json equivalence_json(const EquivalenceReport& report);

/// Header "re,im,residual", one row per root; zero roots included with
/// residual 0.
void write_roots_csv(std::ostream& out, const RootSet& roots, bool header = true);
/// Header "re,im,residual,n": root scatter over a family, one block per n.
void write_scatter_csv(std::ostream& out, const std::vector<std::pair<unsigned, RootSet>>& members);
/// Header "re,im,piece"; isolated points use piece "isolated".
void write_curve_csv(std::ostream& out, const LimitCurve& curve);
/// Header "order,graphs,classes,non_unique".
void write_equivalence_csv(std::ostream& out, const EquivalenceReport& report);

std::string format_double(double v, int digits = kExportDigits);
/// Fixed count of significant digits, trailing zeros kept; 0 prints as "0".
std::string format_significant(double v, int digits);

}  // namespace dompoly
