#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace vsi::cli {

/// Process exit codes. Every failure prints one line
/// `error[<category>]: <message>` on stderr.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,             // unknown flag, missing argument, bad value
  kInvalidCombination = 3,
  kInvalidArgument = 4,
  kFileNotFound = 5,
  kIngestion = 6,         // malformed CSV, missing rate, non-finite data
  kDegenerate = 7,
  kIo = 8,
};

/// Runs the tool; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vsi::cli
