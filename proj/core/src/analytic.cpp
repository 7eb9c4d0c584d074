#include "vsi/analytic.hpp"

#include <cmath>
#include <numbers>

#include "vsi/error.hpp"

namespace vsi::analytic {

using std::numbers::pi;

double harmonic_sample_pdf(double y) {
  if (!(std::abs(y) < 1.0)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "arcsine density requires |y| < 1");
  }
  return 1.0 / (pi * std::sqrt(1.0 - y * y));
}

double harmonic_cumulative_energy(double shifted_power) {
  if (!(shifted_power >= -1.0 && shifted_power <= 1.0)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "shifted power must lie in [-1, 1]");
  }
  const double p = shifted_power;
  return (std::asin(p) - std::sqrt(1.0 - p * p)) / pi;
}

double harmonic_cumulative_energy(double lower, double upper) {
  return harmonic_cumulative_energy(upper) - harmonic_cumulative_energy(lower);
}

double harmonic_cumulative_curve(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "normalized index must lie in [0, 1]");
  }
  if (x == 1.0) return 1.0;
  return harmonic_cumulative_energy(-1.0, -std::cos(pi * x));
}

double staircase_mse(double delta_w) {
  if (!(delta_w >= 0.0)) {
    throw Error(ErrorCategory::kInvalidArgument, "energy step must be >= 0");
  }
  return delta_w * delta_w / 12.0;
}

double harmonic_mean_square(double amplitude_m, double frequency_hz) {
  const double f2 = frequency_hz * frequency_hz;
  return 8.0 * pi * pi * pi * pi * f2 * f2 * amplitude_m * amplitude_m;
}

double pulse_energy(double pulse_amplitude_m, double pulse_width_s) {
  return 3.0 * std::sqrt(pi) * pulse_amplitude_m * pulse_amplitude_m /
         (4.0 * pulse_width_s * pulse_width_s * pulse_width_s);
}

}  // namespace vsi::analytic
