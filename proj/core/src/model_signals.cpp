#include "vsi/model_signals.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vsi/error.hpp"

namespace vsi {

namespace {

using std::numbers::pi;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCategory::kInvalidArgument, message);
}

void check_time_base(double sample_rate_hz, double duration_s) {
  require(std::isfinite(sample_rate_hz) && sample_rate_hz > 0.0,
          "sample rate must be > 0");
  require(std::isfinite(duration_s) && duration_s > 0.0,
          "duration must be > 0");
}

}  // namespace

std::size_t sample_count(double sample_rate_hz, double duration_s) {
  check_time_base(sample_rate_hz, duration_s);
  // Round to absorb representation error in products like 50000 * 10.
  const double n = std::round(sample_rate_hz * duration_s);
  require(n >= 1.0, "duration shorter than one sample interval");
  return static_cast<std::size_t>(n);
}

double PulseTrainParams::pulse_width() const {
  return derive_pulse_width(frequency_hz);
}

double PulseTrainParams::pulse_amplitude() const {
  return derive_pulse_amplitude(frequency_hz, separation_s,
                                reference_amplitude_m);
}

double PulseTrainParams::peak_acceleration() const {
  const double tp = pulse_width();
  return pulse_amplitude() / (tp * tp);
}

double PulseTrainParams::width_ratio() const {
  return pulse_width() / separation_s;
}

Signal gen_harmonic(const HarmonicParams& p, double sample_rate_hz,
                    double duration_s) {
  require(p.amplitude_m >= 0.0 && std::isfinite(p.amplitude_m),
          "harmonic amplitude must be >= 0");
  require(p.frequency_hz > 0.0 && std::isfinite(p.frequency_hz),
          "harmonic frequency must be > 0");
  require(std::isfinite(p.phase_rad), "harmonic phase must be finite");
  const std::size_t n = sample_count(sample_rate_hz, duration_s);
  require(sample_rate_hz > 2.0 * p.frequency_hz,
          "sample rate must exceed twice the harmonic frequency");

  const double omega = 2.0 * pi * p.frequency_hz;
  const double peak = p.amplitude_m * omega * omega;
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate_hz;
    a[i] = -peak * std::cos(omega * t + p.phase_rad);
  }
  return Signal(std::move(a), sample_rate_hz, "harmonic");
}

double derive_pulse_width(double frequency_hz) {
  require(frequency_hz > 0.0 && std::isfinite(frequency_hz),
          "pulse frequency must be > 0");
  return 1.0 / (std::numbers::sqrt2 * pi * frequency_hz);
}

double derive_pulse_amplitude(double frequency_hz, double separation_s,
                              double reference_amplitude_m) {
  require(frequency_hz > 0.0 && separation_s > 0.0 &&
              reference_amplitude_m > 0.0,
          "pulse amplitude parameters must all be > 0");
  return 4.0 *
         std::sqrt(frequency_hz * separation_s / 3.0 * std::sqrt(pi / 2.0)) *
         reference_amplitude_m;
}

double pulse_acceleration(double t, double pulse_amplitude_m,
                          double pulse_width_s) {
  const double tp2 = pulse_width_s * pulse_width_s;
  return pulse_amplitude_m * (t + pulse_width_s) * (t - pulse_width_s) /
         (tp2 * tp2) * std::exp(-t * t / (2.0 * tp2));
}

Signal gen_pulse_train(const PulseTrainParams& p, double sample_rate_hz,
                       double duration_s) {
  require(p.separation_s > 0.0 && std::isfinite(p.separation_s),
          "pulse separation must be > 0");
  const double tp = p.pulse_width();
  const double amp = p.pulse_amplitude();
  const std::size_t n = sample_count(sample_rate_hz, duration_s);
  require(sample_rate_hz * tp >= kMinSamplesPerPulseWidth,
          "sample rate resolves the pulse width with fewer than " +
              std::to_string(kMinSamplesPerPulseWidth) + " samples");

  const double support = kPulseSupportWidths * tp;
  std::vector<double> a(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate_hz;
    const auto k_lo =
        static_cast<long long>(std::ceil((t - support) / p.separation_s));
    const auto k_hi =
        static_cast<long long>(std::floor((t + support) / p.separation_s));
    double sum = 0.0;
    for (long long k = k_lo; k <= k_hi; ++k) {
      sum += pulse_acceleration(t - static_cast<double>(k) * p.separation_s,
                                amp, tp);
    }
    a[i] = sum;
  }
  return Signal(std::move(a), sample_rate_hz, "pulse_train");
}

Signal gen_wgn(double target_rms, double sample_rate_hz, double duration_s,
               std::uint64_t seed) {
  require(target_rms >= 0.0 && std::isfinite(target_rms),
          "noise RMS must be >= 0");
  const std::size_t n = sample_count(sample_rate_hz, duration_s);
  std::vector<double> a(n, 0.0);
  if (target_rms > 0.0) {
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, target_rms);
    for (double& v : a) v = normal(engine);
  }
  return Signal(std::move(a), sample_rate_hz, "wgn");
}

}  // namespace vsi
