#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

// Broad failure classes; the CLI maps each one to a fixed exit code.
enum class ErrorKind {
  input,       // malformed or out-of-range user input
  hypothesis,  // well formed, but outside the closed form's hypotheses
  resource,    // oracle refused to build something too large
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Stable machine-readable identifier, e.g. "tangential_intersection".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

}  // namespace linkhom
