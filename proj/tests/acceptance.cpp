#include <iostream>
#include <string>

#include "dompoly/acceptance.hpp"

int main(int argc, char** argv) {
  dompoly::AcceptanceOptions options;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--export-dir") options.export_dir = argv[++i];
  }
  const auto results = dompoly::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << dompoly::format_result(r);
    if (!r.passed) ++failed;
  }
  std::cout << results.size() - failed << '/' << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
