#pragma once

// CSV ingestion and export of acceleration records.
//
// Format: UTF-8 text, '.' decimal point, one row per sample instant. Lines
// starting with '#' are comments; a comment of the form "# key=value" (or
// "# key: value") is kept as metadata. The sample rate comes from, in order
// of precedence: CsvOptions::sample_rate_hz, the `rate_hz` metadata key, or
// the median spacing of a `time_s` column.
//
// An optional header row names the columns, e.g. `time_s,ax_ms2,ay_ms2,az_ms2`.
// Without a header the layout is inferred from the column count:
//   1: a            2: t, a
//   3: ax, ay, az   4: t, ax, ay, az

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vsi/signal.hpp"

namespace vsi::io {

inline constexpr const char* kRateKey = "rate_hz";
inline constexpr const char* kTimeColumn = "time_s";
/// Relative spread of the time step tolerated when inferring the rate.
inline constexpr double kMaxTimeJitter = 1e-4;

struct CsvOptions {
  std::optional<double> sample_rate_hz;
  /// Acceleration column to extract, by header name or zero-based index
  /// among the acceleration columns.
  std::optional<std::string> channel;
};

struct Recording {
  std::variant<Signal, TriaxialRecord> data;
  std::map<std::string, std::string> metadata;
  std::string source;

  bool is_triaxial() const {
    return std::holds_alternative<TriaxialRecord>(data);
  }
  /// Channels in file order (one, or x/y/z).
  std::vector<const Signal*> channels() const;
  double sample_rate() const { return channels().front()->sample_rate(); }
  std::size_t size() const { return channels().front()->size(); }
};

Recording read_csv(const std::string& path, const CsvOptions& options = {});

/// Same as read_csv on an already open stream; `source` is used in
/// messages and recorded on the result.
Recording parse_csv(std::istream& in, const CsvOptions& options,
                    const std::string& source);

/// Writes `time_s,<column>` rows preceded by `# key=value` metadata lines
/// (rate_hz is always written). Values use shortest round-trip formatting.
void write_csv(std::ostream& out, const Signal& s,
               const std::map<std::string, std::string>& metadata = {},
               const std::string& column = "ax_ms2");

std::string format_double(double value);

}  // namespace vsi::io
