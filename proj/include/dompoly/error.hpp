#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dompoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation argument outside its domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Graph order exceeds the representation cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration requested beyond the subset budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dompoly
