#pragma once

// Vibration shock index (VSI, dimensionless) and vibration shock level
// (VSL, m/s^2) estimators. All functions are pure; they may be called
// concurrently on shared inputs.

#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "vsi/signal.hpp"

namespace vsi {

/// Cumulative-energy threshold that gives VSI = 1 for a harmonic signal.
constexpr double default_threshold_ratio() noexcept {
  return 0.5 - std::numbers::inv_pi;
}

/// Alternative preset: half of the total energy.
inline constexpr double kHalfEnergyThresholdRatio = 0.5;
inline constexpr double kDefaultWmsExponent = 2.0;
inline constexpr double kDefaultMaxFraction = 0.5;

struct CumulativeEnergyResult {
  double vsi = 0.0;
  double vsl = 0.0;               // m/s^2
  std::size_t below = 0;          // M, samples whose energy stays under the threshold
  std::size_t total = 0;          // N
  double threshold_ratio = 0.0;
  double total_energy = 0.0;      // m^2/s^3

  bool operator==(const CumulativeEnergyResult&) const = default;
};

struct WmsResult {
  double vsi = 0.0;
  double vsl = 0.0;  // root weighted mean square, m/s^2
  double rms = 0.0;
  double exponent = 0.0;

  bool operator==(const WmsResult&) const = default;
};

/// Population excess kurtosis mu4 / sigma^4 - 3 of the power samples.
/// Throws kDegenerate for fewer than 4 samples or zero variance.
double excess_kurtosis(const PowerSignal& p);

/// n_low / n_high around max_fraction * max(P). Samples equal to the
/// threshold count as high. Sensitive to outliers through max(P).
double threshold_count_vsi(const PowerSignal& p, double max_fraction);

/// Effective energy step sqrt(12 * MSE) of a sampled cumulative-energy curve
/// about its least-squares line (slope and intercept both free).
double energy_step_from_curve(std::span<const double> cumulative_energy);

/// Builds W_n = dt * sum_{i<=n} a_i^2 and returns its energy step (m^2/s^3).
double energy_step(const Signal& s);

/// Sorts the power ascending, finds the largest M with normalized partial
/// sum W_M / W_tot < threshold_ratio and reports VSI = M / (N - M) and
/// VSL = sqrt of the (M+1)-th smallest power sample.
CumulativeEnergyResult cumulative_energy_analysis(
    const Signal& s, double threshold_ratio = default_threshold_ratio());

/// WMS(K) = sum P^(K+1) / sum P^K; VSL = sqrt(WMS(K)); VSI = VSL / RMS.
WmsResult wms_analysis(const Signal& s, double exponent = kDefaultWmsExponent);

/// ISO 5349 vibration total value from per-axis RMS values.
double ahv(double rms_x, double rms_y, double rms_z);
double ahv(const TriaxialRecord& record);

enum class Method { kKurtosis, kThresholdCount, kEnergyStep, kCumulative, kWms };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;
const std::set<Method>& all_methods();

struct AnalysisConfig {
  double threshold_ratio = default_threshold_ratio();
  double wms_exponent = kDefaultWmsExponent;
  double max_fraction = kDefaultMaxFraction;
  std::set<Method> methods = all_methods();

  /// Throws kInvalidArgument unless ratios are in (0, 1) and K >= 0.
  void validate() const;

  bool operator==(const AnalysisConfig&) const = default;
};

/// Per-signal results. An estimator that was not requested, or that failed,
/// leaves its slot empty; failures are recorded in `errors` keyed by method.
struct ShockAnalysis {
  double rms = 0.0;
  std::optional<double> kurtosis_vsi;
  std::optional<double> threshold_count_vsi;
  std::optional<double> energy_step;
  std::optional<CumulativeEnergyResult> cumulative;
  std::optional<WmsResult> wms;
  std::map<std::string, std::string> errors;

  bool operator==(const ShockAnalysis&) const = default;
};

ShockAnalysis analyze(const Signal& s, const AnalysisConfig& config = {});

}  // namespace vsi
