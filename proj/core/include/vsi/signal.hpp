#pragma once

// Sampled acceleration signals and the elementary statistics every
// estimator builds on. Samples are in m/s^2 by convention; units are
// carried as metadata and never converted.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vsi {

inline constexpr const char* kAccelerationUnits = "m/s^2";

/// Uniformly sampled acceleration record. Construction validates: samples
/// non-empty and finite, sample rate finite and > 0.
class Signal {
 public:
  Signal(std::vector<double> samples, double sample_rate_hz,
         std::string label = {}, std::string units = kAccelerationUnits);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double sample_rate() const noexcept { return sample_rate_; }
  double sample_interval() const noexcept { return 1.0 / sample_rate_; }
  double duration() const noexcept {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }
  const std::string& label() const noexcept { return label_; }
  const std::string& units() const noexcept { return units_; }

  /// alpha * samples, same time base.
  Signal scaled(double alpha) const;

  bool operator==(const Signal&) const = default;

 private:
  std::vector<double> samples_;
  double sample_rate_;
  std::string label_;
  std::string units_;
};

/// Elementwise square of an acceleration signal (m^2/s^4).
class PowerSignal {
 public:
  PowerSignal(std::vector<double> samples, double sample_rate_hz);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double sample_rate() const noexcept { return sample_rate_; }
  double sample_interval() const noexcept { return 1.0 / sample_rate_; }

 private:
  std::vector<double> samples_;
  double sample_rate_;
};

/// Three orthogonal axes on a shared time base.
struct TriaxialRecord {
  TriaxialRecord(Signal x_axis, Signal y_axis, Signal z_axis);

  Signal x;
  Signal y;
  Signal z;
};

PowerSignal power_signal(const Signal& s);

double rms(const Signal& s);

/// W_tot = dt * sum(P_n), m^2/s^3.
double total_energy(const PowerSignal& p);

}  // namespace vsi
