#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resq {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  MalformedLine,
  InvalidFamilyParams,
  Disconnected,
  NotSymmetric,
  InvalidPartition,
  NonRealSpectrum,
  DimensionMismatch,
  NegativeRadicand,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace resq
