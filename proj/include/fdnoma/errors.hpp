#pragma once

#include <stdexcept>
#include <string>

namespace fdnoma {

/// Bad input: violated precondition, malformed config, unknown CLI token.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NumericErrorKind {
  kDomain,
  kNullSpaceExhausted,
  kTargetInNullSpan,
  kNotPositiveDefinite,
};

class NumericError : public std::runtime_error {
 public:
  NumericError(NumericErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  NumericErrorKind kind() const noexcept { return kind_; }

 private:
  NumericErrorKind kind_;
};

}  // namespace fdnoma
