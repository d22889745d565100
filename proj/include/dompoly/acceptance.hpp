#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "dompoly/polynomial.hpp"

namespace dompoly {

struct CheckResult {
  int id = 0;
  std::string name;
  /// What the check exercises, in words.
  std::string claim;
  bool passed = false;
  std::string detail;
  /// Reportable observations that do not by themselves fail the check.
  std::vector<std::string> findings;
  double seconds = 0;
  /// Wall-clock ceiling; 0 means none.
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  std::filesystem::path catalog_dir = std::filesystem::path(DOMPOLY_DATA_DIR) / "catalogs";
  std::filesystem::path export_dir = std::filesystem::temp_directory_path() / "dompoly-acceptance";
  /// Called once per result, in id order, after all checks have run.
  std::function<void(const CheckResult&)> on_result;
};

/// Every polynomial the checks compute passes through here so the parity
/// of D(G, 1) can be checked over all of them.
class ParityRegistry {
 public:
  void record(const IntPolynomial& p, const std::string& source);
  std::size_t count() const noexcept { return count_; }
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> violations_;
};

inline constexpr int kAcceptanceCheckCount = 10;

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options = {});

/// One PASS/FAIL line plus indented detail and findings.
std::string format_result(const CheckResult& result);

}  // namespace dompoly
