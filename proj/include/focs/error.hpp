#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace focs {

enum class ErrorKind {
  kParse,
  kDimensionMismatch,
  kDivisionByZero,
  kSingular,
  kInconsistent,
  kNotHermitian,
  kNotSelfadjoint,
  kIrrationalSpectrum,
  kNonconstructibleScaling,
  kBadSignature,
  kBadGamma,
  kGeneratorExhausted,
  kInvalidArgument,
  kInternalStructureMismatch,
};

/// Stable identifier used in diagnostics and by the C API, e.g. "IrrationalSpectrum".
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace focs
