#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsi {

/// Broad failure classes. The CLI maps each one to a distinct exit code.
enum class ErrorCategory {
  kInvalidArgument,  // parameter outside its documented domain
  kInvalidSignal,    // empty, non-finite, or otherwise malformed samples
  kDegenerate,       // estimator undefined for this input (zero energy, ...)
  kFileNotFound,
  kMalformedInput,   // unparsable row, inconsistent columns, bad header
  kMissingSampleRate,
  kIrregularTime,    // time column with too much jitter
  kIo,
};

std::string_view to_string(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace vsi
