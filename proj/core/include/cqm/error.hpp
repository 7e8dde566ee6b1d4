#pragma once

#include <stdexcept>
#include <string>

namespace cqm {

enum class ErrorKind {
  kInvalidInput,
  kInvalidQuantumNumbers,
  kInvalidState,
  kDomain,
  kPoleProximity,
  kSingularity,
  kQuadrature,
  kUnsupported,
  kInconsistentEvent,
  kStep,
  kCloud,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cqm
