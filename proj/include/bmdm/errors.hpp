#pragma once

#include <stdexcept>
#include <string>

namespace bmdm {

enum class Errc {
  DuplicateEdge,
  IndexOutOfRange,
  NegativeCapacity,
  UnknownEdgeId,
  NotABMatching,
  NotMaximumMatching,
  UnknownComponent,
  InconsistentDecomposition,
  NotAnIdeal,
  NotNormalized,
  NotVerifying,
  MalformedSet,
  TooLarge,
  ParseError,
  InvalidArgument,
  InternalInvariant,
};

const char* errc_name(Errc code) noexcept;

/// Library-wide exception. `code()` identifies the failure class so callers
/// can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bmdm
