#pragma once

#include <ostream>

namespace dompoly {

/// Exit codes: 0 success, 1 failed verification check, 2 parse or usage
/// error, 3 enumeration budget exceeded, 4 computation paths disagree,
/// 5 other runtime failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(argc, const_cast<const char* const*>(argv), out, err);
}

}  // namespace dompoly
