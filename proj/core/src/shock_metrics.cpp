#include "vsi/shock_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vsi/error.hpp"
#include "vsi/summation.hpp"

namespace vsi {

namespace {

[[noreturn]] void degenerate(const std::string& message) {
  throw Error(ErrorCategory::kDegenerate, message);
}

bool in_open_unit_interval(double v) {
  return std::isfinite(v) && v > 0.0 && v < 1.0;
}

}  // namespace

double excess_kurtosis(const PowerSignal& p) {
  const auto x = p.samples();
  if (x.size() < 4) degenerate("kurtosis needs at least 4 samples");
  const auto n = static_cast<double>(x.size());

  const double mean = compensated_sum(x) / n;
  CompensatedSum m2;
  CompensatedSum m4;
  for (double v : x) {
    const double d = v - mean;
    const double d2 = d * d;
    m2.add(d2);
    m4.add(d2 * d2);
  }
  const double variance = m2.value() / n;
  if (!(variance > 0.0)) {
    degenerate("kurtosis undefined for constant power (zero variance)");
  }
  return (m4.value() / n) / (variance * variance) - 3.0;
}

double threshold_count_vsi(const PowerSignal& p, double max_fraction) {
  if (!in_open_unit_interval(max_fraction)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "max_fraction must lie in (0, 1)");
  }
  const auto x = p.samples();
  const double threshold = max_fraction * *std::max_element(x.begin(), x.end());
  const auto low = static_cast<std::size_t>(
      std::count_if(x.begin(), x.end(), [&](double v) { return v < threshold; }));
  const std::size_t high = x.size() - low;
  if (high == 0) degenerate("no power samples at or above the threshold");
  return static_cast<double>(low) / static_cast<double>(high);
}

double energy_step_from_curve(std::span<const double> w) {
  if (w.size() < 3) degenerate("energy step needs at least 3 samples");
  const auto n = static_cast<double>(w.size());

  // Abscissa is the sample index; the residual does not depend on the
  // time scale of the fit.
  const double x_mean = (n - 1.0) / 2.0;
  const double sxx = n * (n * n - 1.0) / 12.0;
  const double w_mean = compensated_sum(w) / n;
  CompensatedSum sxy;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sxy.add((static_cast<double>(i) - x_mean) * (w[i] - w_mean));
  }
  const double slope = sxy.value() / sxx;

  CompensatedSum sse;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r =
        (w[i] - w_mean) - slope * (static_cast<double>(i) - x_mean);
    sse.add(r * r);
  }
  return std::sqrt(12.0 * sse.value() / n);
}

double energy_step(const Signal& s) {
  const auto power = power_signal(s);
  std::vector<double> w = prefix_sums(power.samples());
  const double dt = s.sample_interval();
  for (double& v : w) v *= dt;
  return energy_step_from_curve(w);
}

CumulativeEnergyResult cumulative_energy_analysis(const Signal& s,
                                                  double threshold_ratio) {
  if (!in_open_unit_interval(threshold_ratio)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "threshold_ratio must lie in (0, 1)");
  }
  if (s.size() < 2) degenerate("cumulative energy needs at least 2 samples");

  std::vector<double> sorted(s.size());
  std::transform(s.samples().begin(), s.samples().end(), sorted.begin(),
                 [](double a) { return a * a; });
  std::sort(sorted.begin(), sorted.end());

  const std::vector<double> partial = prefix_sums(sorted);
  const double total = partial.back();
  if (!(total > 0.0)) degenerate("cumulative energy undefined for zero energy");

  // partial[i] is the (i+1)-th partial sum; the normalized sums are
  // non-decreasing so the count of those under the ratio is M.
  const auto first_at_or_above = std::partition_point(
      partial.begin(), partial.end(),
      [&](double w) { return w / total < threshold_ratio; });
  const auto below = static_cast<std::size_t>(first_at_or_above - partial.begin());
  const std::size_t n = sorted.size();
  if (below >= n) degenerate("cumulative threshold never reached");

  CumulativeEnergyResult r;
  r.below = below;
  r.total = n;
  r.vsi = static_cast<double>(below) / static_cast<double>(n - below);
  r.vsl = std::sqrt(sorted[below]);
  r.threshold_ratio = threshold_ratio;
  r.total_energy = s.sample_interval() * total;
  return r;
}

WmsResult wms_analysis(const Signal& s, double exponent) {
  if (!std::isfinite(exponent) || exponent < 0.0) {
    throw Error(ErrorCategory::kInvalidArgument, "WMS exponent must be >= 0");
  }
  const auto power = power_signal(s);
  const auto p = power.samples();
  const double p_max = *std::max_element(p.begin(), p.end());
  if (!(p_max > 0.0)) degenerate("weighted mean square undefined for a zero signal");

  // Normalizing by the peak power keeps P^K within [0, 1] for any K.
  CompensatedSum weighted;
  CompensatedSum weights;
  CompensatedSum plain;
  for (double v : p) {
    const double q = v / p_max;
    const double w = std::pow(q, exponent);
    weighted.add(q * w);
    weights.add(w);
    plain.add(q);
  }
  WmsResult r;
  r.exponent = exponent;
  r.vsl = std::sqrt(p_max * weighted.value() / weights.value());
  r.rms = std::sqrt(p_max * plain.value() / static_cast<double>(p.size()));
  r.vsi = r.vsl / r.rms;
  return r;
}

double ahv(double rms_x, double rms_y, double rms_z) {
  for (double v : {rms_x, rms_y, rms_z}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCategory::kInvalidArgument,
                  "axis RMS values must be finite and >= 0");
    }
  }
  return std::hypot(rms_x, rms_y, rms_z);
}

double ahv(const TriaxialRecord& record) {
  return ahv(rms(record.x), rms(record.y), rms(record.z));
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::kKurtosis: return "kurtosis";
    case Method::kThresholdCount: return "threshold_count";
    case Method::kEnergyStep: return "energy_step";
    case Method::kCumulative: return "cumulative";
    case Method::kWms: return "wms";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : all_methods()) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

const std::set<Method>& all_methods() {
  static const std::set<Method> methods{Method::kKurtosis,
                                        Method::kThresholdCount,
                                        Method::kEnergyStep,
                                        Method::kCumulative, Method::kWms};
  return methods;
}

void AnalysisConfig::validate() const {
  if (!in_open_unit_interval(threshold_ratio)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "threshold_ratio must lie in (0, 1)");
  }
  if (!in_open_unit_interval(max_fraction)) {
    throw Error(ErrorCategory::kInvalidArgument,
                "max_fraction must lie in (0, 1)");
  }
  if (!std::isfinite(wms_exponent) || wms_exponent < 0.0) {
    throw Error(ErrorCategory::kInvalidArgument, "WMS exponent must be >= 0");
  }
}

ShockAnalysis analyze(const Signal& s, const AnalysisConfig& config) {
  config.validate();
  ShockAnalysis out;
  out.rms = rms(s);

  const auto run = [&](Method m, auto&& estimator) {
    if (!config.methods.contains(m)) return;
    try {
      estimator();
    } catch (const Error& e) {
      out.errors.emplace(std::string(to_string(m)), e.what());
    }
  };

  const auto power = power_signal(s);
  run(Method::kKurtosis, [&] { out.kurtosis_vsi = excess_kurtosis(power); });
  run(Method::kThresholdCount, [&] {
    out.threshold_count_vsi = threshold_count_vsi(power, config.max_fraction);
  });
  run(Method::kEnergyStep, [&] { out.energy_step = energy_step(s); });
  run(Method::kCumulative, [&] {
    out.cumulative = cumulative_energy_analysis(s, config.threshold_ratio);
  });
  run(Method::kWms, [&] { out.wms = wms_analysis(s, config.wms_exponent); });
  return out;
}

}  // namespace vsi
