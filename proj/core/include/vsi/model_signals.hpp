#pragma once

// Reference signals: a harmonic oscillation, a train of Gaussian position
// pulses and white Gaussian noise. Positions are specified in closed form
// and the acceleration is their exact second time derivative, so the
// integrated motion always stays bounded.

#include <cstdint>
#include <string>

#include "vsi/signal.hpp"

namespace vsi {

/// x(t) = amplitude * cos(2*pi*frequency*t + phase).
struct HarmonicParams {
  double amplitude_m = 3.58e-6;
  double frequency_hz = 100.0;
  double phase_rad = 0.0;
};

/// Gaussian position pulses every `separation_s`, shaped so the pulse
/// acceleration spectrum peaks at `frequency_hz` and the train has the
/// same acceleration RMS as a harmonic of amplitude `reference_amplitude_m`.
struct PulseTrainParams {
  double frequency_hz = 100.0;
  double separation_s = 0.1;
  double reference_amplitude_m = 3.58e-6;

  double pulse_width() const;
  double pulse_amplitude() const;
  double peak_acceleration() const;
  /// Pulse width over separation; the RMS matching assumes this is small.
  double width_ratio() const;
  bool is_pulsed() const { return width_ratio() <= kPulsedWidthRatio; }

  static constexpr double kPulsedWidthRatio = 0.1;
};

/// Pulses are summed only within this many pulse widths of their center.
inline constexpr double kPulseSupportWidths = 8.0;
/// Minimum samples per pulse width accepted by gen_pulse_train.
inline constexpr double kMinSamplesPerPulseWidth = 10.0;

/// Identifier written next to every seed so noise records can be regenerated.
inline constexpr const char* kNoiseAlgorithm =
    "mt19937_64/std::normal_distribution(libstdc++)";

/// a(t) = -A (2 pi f)^2 cos(2 pi f t + phi), sampled at t = n / sample_rate.
Signal gen_harmonic(const HarmonicParams& p, double sample_rate_hz,
                    double duration_s);

/// t_p = 1 / (sqrt(2) pi f_c).
double derive_pulse_width(double frequency_hz);

/// A_p = 4 sqrt((f_c T_p / 3) sqrt(pi/2)) A_c.
double derive_pulse_amplitude(double frequency_hz, double separation_s,
                              double reference_amplitude_m);

/// Acceleration of one pulse centred at t = 0, in closed form.
double pulse_acceleration(double t, double pulse_amplitude_m,
                          double pulse_width_s);

/// Pulse train with a pulse centred at t = 0 and every `separation_s`
/// thereafter. Requires at least kMinSamplesPerPulseWidth samples per t_p.
Signal gen_pulse_train(const PulseTrainParams& p, double sample_rate_hz,
                       double duration_s);

/// i.i.d. zero-mean Gaussian samples with standard deviation `target_rms`.
Signal gen_wgn(double target_rms, double sample_rate_hz, double duration_s,
               std::uint64_t seed);

/// Number of samples covering [0, duration) at the given rate.
std::size_t sample_count(double sample_rate_hz, double duration_s);

}  // namespace vsi
