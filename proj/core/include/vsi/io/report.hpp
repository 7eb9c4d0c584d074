#pragma once

// JSON analysis reports. Layout (schema_version 1):
//
//   schema_version, tool_version, source, metadata{...}, sample_rate_hz,
//   n_samples, frequency_weighting, config{threshold_ratio, K, max_fraction,
//   methods[]}, results{<channel>: {rms, kurtosis_vsi, threshold_count_vsi,
//   energy_step, cumulative{vsi, vsl, M, N, threshold_ratio, w_tot},
//   wms{vsi, vsl, K, rms}, errors{...}}}, ahv (triaxial only), warnings[]
//
// Estimators that were not run or failed serialize as null.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsi/io/csv.hpp"
#include "vsi/shock_metrics.hpp"

namespace vsi::io {

inline constexpr int kSchemaVersion = 1;

struct ChannelReport {
  std::string name;
  ShockAnalysis analysis;

  bool operator==(const ChannelReport&) const = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string tool_version;
  std::string source;
  std::map<std::string, std::string> metadata;
  double sample_rate_hz = 0.0;
  std::size_t n_samples = 0;
  std::string frequency_weighting = "none";
  AnalysisConfig config;
  std::vector<ChannelReport> results;
  std::optional<double> ahv;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

/// Runs every configured estimator on each channel. Adds a warning when the
/// record is shorter than `min_samples`.
Report analyze_recording(const Recording& recording,
                         const AnalysisConfig& config,
                         std::size_t min_samples = 100000);

std::string to_json(const Report& report);
/// Throws Error(kMalformedInput) on invalid documents or schema mismatch.
Report report_from_json(std::string_view text);

}  // namespace vsi::io
