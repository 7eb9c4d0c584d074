// Acceptance suite: reproduces the reference values for the model signals
// at the default settings (50 kHz, 10 s; noise at N = 1e6) and prints one
// PASS/FAIL line per criterion followed by the individual checks.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "model_fixtures.hpp"
#include "oracles.hpp"
#include "vsi/analytic.hpp"
#include "vsi/io/curves.hpp"
#include "vsi/io/report.hpp"
#include "vsi/model_signals.hpp"
#include "vsi/shock_metrics.hpp"

using namespace vsi;

namespace {

struct Check {
  std::string what;
  double measured;
  std::string expected;
  bool pass;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void abs(const std::string& what, double measured, double target, double tol) {
    add(what, measured, fmt(target) + " +/- " + fmt(tol),
        std::abs(measured - target) <= tol);
  }
  void rel(const std::string& what, double measured, double target, double tol) {
    add(what, measured, fmt(target) + " +/- " + fmt(100 * tol) + " %",
        std::abs(measured - target) <= tol * std::abs(target));
  }
  void at_most(const std::string& what, double measured, double bound) {
    add(what, measured, "<= " + fmt(bound), measured <= bound);
  }
  void above(const std::string& what, double measured, double bound) {
    add(what, measured, "> " + fmt(bound), measured > bound);
  }
  void truth(const std::string& what, bool ok) {
    add(what, ok ? 1.0 : 0.0, "true", ok);
  }

  bool report() const {
    const bool ok = std::all_of(checks_.begin(), checks_.end(),
                                [](const Check& c) { return c.pass; });
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", title_.c_str());
    for (const auto& c : checks_) {
      std::printf("    %-4s %-58s %14.6g  (expected %s)\n", c.pass ? "ok" : "FAIL",
                  c.what.c_str(), c.measured, c.expected.c_str());
    }
    std::fflush(stdout);
    return ok;
  }

 private:
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
  }
  void add(const std::string& what, double measured, std::string expected, bool pass) {
    checks_.push_back({what, measured, std::move(expected), pass});
  }

  std::string title_;
  std::vector<Check> checks_;
};

double max_abs(const Signal& s) {
  double m = 0.0;
  for (double v : s.samples()) m = std::max(m, std::abs(v));
  return m;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double coefficient_of_variation(const std::vector<double>& v) {
  const double m = mean(v);
  double var = 0.0;
  for (double x : v) var += (x - m) * (x - m);
  var /= static_cast<double>(v.size() - 1);
  return std::sqrt(var) / m;
}

constexpr int kNoiseSeeds = 5;
constexpr int kFragilitySeeds = 20;

const Signal& harmonic() { return testing::harmonic_signal(); }
const Signal& pulsed() { return testing::pulsed_signal(); }

bool model_signal_fidelity() {
  Criterion c("1 model-signal fidelity");
  c.rel("harmonic RMS [m/s^2]", rms(harmonic()), 1.0, 0.001);
  c.rel("harmonic peak [m/s^2]", max_abs(harmonic()), 1.41, 0.005);
  c.rel("pulse train (Tp = 0.1 s) peak [m/s^2]", max_abs(pulsed()), 5.78, 0.005);
  c.rel("pulse train (Tp = 0.1 s) RMS [m/s^2]", rms(pulsed()), 1.0, 0.01);
  return c.report();
}

bool kurtosis_targets() {
  Criterion c("2 excess kurtosis of the power signal");
  c.abs("harmonic", excess_kurtosis(power_signal(harmonic())), -1.5, 0.02);
  c.rel("pulse train, Tp = 0.1 s", excess_kurtosis(power_signal(pulsed())), 35.6, 0.05);
  c.abs("pulse train, Tp = 0.01 s",
        excess_kurtosis(power_signal(testing::make_pulse_train(0.01))), -0.23, 0.05);
  for (int seed = 1; seed <= kNoiseSeeds; ++seed) {
    c.abs("squared WGN, N = 1e6, seed " + std::to_string(seed),
          excess_kurtosis(power_signal(testing::noise_signal(seed))), 12.0, 0.5);
  }
  return c.report();
}

bool cumulative_energy_method() {
  Criterion c("3 cumulative-energy method, threshold 1/2 - 1/pi");
  const auto h = cumulative_energy_analysis(harmonic());
  c.abs("harmonic VSI", h.vsi, 1.0, 0.01);
  c.rel("harmonic VSL [m/s^2]", h.vsl, 1.0, 0.01);
  const auto p = cumulative_energy_analysis(pulsed());
  c.rel("pulse train VSI", p.vsi, 17.7, 0.05);
  c.rel("pulse train VSL [m/s^2]", p.vsl, 2.4, 0.05);
  std::vector<double> noise;
  for (int seed = 1; seed <= kNoiseSeeds; ++seed) {
    noise.push_back(cumulative_energy_analysis(testing::noise_signal(seed)).vsi);
  }
  c.abs("WGN VSI, N = 1e6, mean of 5 seeds", mean(noise), 2.0, 0.1);
  return c.report();
}

bool wms_method() {
  Criterion c("4 weighted-mean-square method, K = 2");
  const auto h = wms_analysis(harmonic(), 2.0);
  c.abs("harmonic VSI vs sqrt(5/3)", h.vsi, std::sqrt(5.0 / 3.0), 0.005);
  c.rel("harmonic VSL [m/s^2]", h.vsl, 1.29, 0.01);
  const auto p = wms_analysis(pulsed(), 2.0);
  c.rel("pulse train VSI", p.vsi, 5.1, 0.05);
  c.rel("pulse train VSL [m/s^2]", p.vsl, 5.1, 0.05);
  std::vector<double> noise;
  for (int seed = 1; seed <= kNoiseSeeds; ++seed) {
    noise.push_back(wms_analysis(testing::noise_signal(seed), 2.0).vsi);
  }
  c.abs("WGN VSI, N = 1e6, mean of 5 seeds", mean(noise), 2.2, 0.1);
  return c.report();
}

bool threshold_count_method() {
  Criterion c("5 threshold-count method, 50 % of max power");
  c.abs("harmonic VSI", threshold_count_vsi(power_signal(harmonic()), 0.5), 1.0, 0.01);
  c.rel("pulse train VSI", threshold_count_vsi(power_signal(pulsed()), 0.5), 47.0, 0.2);
  std::vector<double> noise;
  for (int seed = 1; seed <= kFragilitySeeds; ++seed) {
    noise.push_back(threshold_count_vsi(power_signal(testing::noise_signal(seed)), 0.5));
  }
  c.above("WGN VSI, smallest of 20 seeds", *std::min_element(noise.begin(), noise.end()), 100.0);
  c.above("WGN VSI, coefficient of variation over 20 seeds",
          coefficient_of_variation(noise), 0.5);
  return c.report();
}

bool analytic_oracle_agreement() {
  Criterion c("6 cumulative-energy curves vs closed form");
  const auto h = io::export_cumulative_curve(harmonic(), harmonic().size());
  double worst = 0.0;
  for (std::size_t i = 0; i < h.x.size(); ++i) {
    worst = std::max(worst, std::abs(h.y[i] - analytic::harmonic_cumulative_curve(h.x[i])));
  }
  c.at_most("harmonic curve sup-norm error", worst, 0.005);

  const auto near = std::lower_bound(h.x.begin(), h.x.end(), 0.9);
  const double y_at_09 = h.y[static_cast<std::size_t>(near - h.x.begin())];
  c.abs("harmonic curve at x = 0.9", y_at_09, 0.8, 0.01);

  const auto p = io::export_cumulative_curve(pulsed(), pulsed().size());
  const auto reach = std::lower_bound(p.y.begin(), p.y.end(), 0.8);
  c.abs("pulse train: x where y reaches 0.8",
        p.x[static_cast<std::size_t>(reach - p.y.begin())], 0.994, 0.002);
  return c.report();
}

bool property_suite() {
  Criterion c("7 invariants");
  const std::vector<const Signal*> models{&harmonic(), &pulsed()};
  const Signal noise = testing::noise_signal(3);
  std::vector<const Signal*> all = models;
  all.push_back(&noise);

  const auto rel_diff = [](double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
  };

  double worst_vsi = 0.0;
  double worst_level = 0.0;
  for (const Signal* s : all) {
    for (double alpha : {-3.7, 1e-3, 2.5e4}) {
      const Signal t = s->scaled(alpha);
      const auto ps = power_signal(*s);
      const auto pt = power_signal(t);
      worst_vsi = std::max({worst_vsi,
          rel_diff(excess_kurtosis(ps), excess_kurtosis(pt)),
          rel_diff(threshold_count_vsi(ps, 0.5), threshold_count_vsi(pt, 0.5)),
          rel_diff(cumulative_energy_analysis(*s).vsi, cumulative_energy_analysis(t).vsi),
          rel_diff(wms_analysis(*s).vsi, wms_analysis(t).vsi)});
      const double a = std::abs(alpha);
      worst_level = std::max({worst_level,
          rel_diff(rms(t), a * rms(*s)),
          rel_diff(cumulative_energy_analysis(t).vsl, a * cumulative_energy_analysis(*s).vsl),
          rel_diff(wms_analysis(t).vsl, a * wms_analysis(*s).vsl)});
    }
  }
  c.at_most("scale invariance of VSI (max rel. difference)", worst_vsi, 1e-10);
  c.at_most("scale equivariance of VSL/RMS (max rel. difference)", worst_level, 1e-10);

  bool cum_up = true;
  bool kurt_up = true;
  double prev_cum = -1.0;
  double prev_kurt = -10.0;
  for (double separation : {0.01, 0.03, 0.1, 0.3}) {
    const Signal s = testing::make_pulse_train(separation);
    const double v = cumulative_energy_analysis(s).vsi;
    const double k = excess_kurtosis(power_signal(s));
    cum_up = cum_up && v > prev_cum;
    kurt_up = kurt_up && k > prev_kurt;
    prev_cum = v;
    prev_kurt = k;
  }
  c.truth("cumulative VSI increases with Tp in {0.01, 0.03, 0.1, 0.3} s", cum_up);
  c.truth("excess kurtosis increases with Tp in {0.01, 0.03, 0.1, 0.3} s", kurt_up);

  {
    // One appended sample carrying 100x the peak power.
    std::vector<double> x(noise.samples().begin(), noise.samples().end());
    x.push_back(std::sqrt(100.0) * max_abs(noise));
    const Signal spiked(std::move(x), noise.sample_rate());
    const double cum_change = std::abs(cumulative_energy_analysis(spiked).vsi /
                                       cumulative_energy_analysis(noise).vsi - 1.0);
    const double tc_ratio = threshold_count_vsi(power_signal(spiked), 0.5) /
                            threshold_count_vsi(power_signal(noise), 0.5);
    c.at_most("outlier: relative change of cumulative VSI", cum_change, 0.01);
    c.above("outlier: factor change of threshold-count VSI", tc_ratio, 10.0);
  }

  {
    std::mt19937_64 rng(17);
    double worst_perm = 0.0;
    for (const Signal* s : all) {
      std::vector<double> x(s->samples().begin(), s->samples().end());
      std::shuffle(x.begin(), x.end(), rng);
      const Signal t(std::move(x), s->sample_rate());
      const auto ps = power_signal(*s);
      const auto pt = power_signal(t);
      worst_perm = std::max({worst_perm,
          rel_diff(excess_kurtosis(ps), excess_kurtosis(pt)),
          rel_diff(threshold_count_vsi(ps, 0.5), threshold_count_vsi(pt, 0.5)),
          rel_diff(cumulative_energy_analysis(*s).vsi, cumulative_energy_analysis(t).vsi),
          rel_diff(wms_analysis(*s).vsi, wms_analysis(t).vsi)});
      if (s == &pulsed()) {
        c.above("energy step changes when the pulse train is shuffled (rel.)",
                rel_diff(energy_step(*s), energy_step(t)), 0.1);
      }
    }
    c.at_most("permutation invariance (max rel. difference)", worst_perm, 1e-12);
  }

  {
    bool identical = true;
    for (const Signal* s : all) {
      const auto report = io::analyze_recording(io::Recording{*s, {{"seed", "3"}}, "model"}, {});
      identical = identical && io::report_from_json(io::to_json(report)) == report;
    }
    c.truth("JSON report round trip is the identity", identical);
  }
  return c.report();
}

bool energy_step_estimator() {
  Criterion c("8 energy-step estimator");
  std::vector<double> stairs(100000);
  for (std::size_t i = 0; i < stairs.size(); ++i) stairs[i] = static_cast<double>(i / 100);
  c.rel("ideal staircase, step 1.0", energy_step_from_curve(stairs), 1.0, 0.01);
  c.at_most("constant power", energy_step(Signal(std::vector<double>(500000, 1.0), 50000.0)),
            1e-10);

  const PulseTrainParams params{testing::kRefFrequency, 0.1, testing::kRefAmplitude};
  const double amp = params.pulse_amplitude();
  const double tp = params.pulse_width();
  const double single_pulse = testing::simpson(
      [&](double t) { return std::pow(testing::gaussian_pulse_accel(t, amp, tp), 2); },
      -12 * tp, 12 * tp, 20000);
  c.rel("pulse train vs single-pulse energy [m^2/s^3]", energy_step(pulsed()),
        single_pulse, 0.05);
  return c.report();
}

}  // namespace

int main() {
  std::printf("acceptance suite: 50 kHz, 10 s model signals; WGN at N = 1e6\n");
  const std::vector<std::function<bool()>> criteria{
      model_signal_fidelity, kurtosis_targets,      cumulative_energy_method,
      wms_method,            threshold_count_method, analytic_oracle_agreement,
      property_suite,        energy_step_estimator};
  int failed = 0;
  for (const auto& run : criteria) failed += run() ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
