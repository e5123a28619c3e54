#pragma once

#include <stdexcept>
#include <string>

namespace toughspec {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  UndefinedToughness,
  BudgetExceeded,
  Infeasible,
  Contradiction,
  NonRealSpectrum,
};

// Base error for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_argument(const std::string& what) {
  return Error(ErrorKind::InvalidArgument, what);
}

}  // namespace toughspec
