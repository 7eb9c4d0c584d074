#pragma once

// Closed-form results for the harmonic reference signal and the ideal
// energy staircase. Used as independent oracles by the test suites.

namespace vsi::analytic {

/// Density of y = sin(t) sampled at a uniformly random time:
/// 1 / (pi sqrt(1 - y^2)). Requires |y| < 1.
double harmonic_sample_pdf(double y);

/// Antiderivative (1/pi)(arcsin P - sqrt(1 - P^2)) of (P + 1) f(P), where the
/// shifted coordinate P in [-1, 1] maps affinely onto physical power
/// [0, P_max] via (P + 1) P_max / 2.
double harmonic_cumulative_energy(double shifted_power);

/// Definite integral of (P + 1) f(P) over [lower, upper] within [-1, 1].
double harmonic_cumulative_energy(double lower, double upper);

/// Normalized cumulative energy of the sorted harmonic power as a function
/// of the normalized sample index x in [0, 1]. Sample fraction x
/// corresponds to P = -cos(pi x); the total is 1.
double harmonic_cumulative_curve(double x);

/// Mean square residual of an ideal staircase about its best-fit line.
double staircase_mse(double delta_w);

/// Mean square acceleration of a harmonic with amplitude A and frequency f:
/// 8 pi^4 f^4 A^2.
double harmonic_mean_square(double amplitude_m, double frequency_hz);

/// Energy of one pulse's acceleration over all time:
/// 3 sqrt(pi) A_p^2 / (4 t_p^3).
double pulse_energy(double pulse_amplitude_m, double pulse_width_s);

}  // namespace vsi::analytic
