#pragma once

#include <stdexcept>
#include <string>

namespace lamseifert {

// Every failure the library reports is one of these kinds. The CLI maps all
// of them to exit status 1 except Io, which maps to 2.
enum class ErrorKind {
  Syntax,
  Structure,
  Index,
  PrecisionExhausted,
  NotRepresentable,
  NotNormalizable,
  NonPositiveSum,
  NonPositiveWeight,
  NotInvariant,
  SplitDiverged,
  ConventionMismatch,
  NotASurface,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lamseifert
