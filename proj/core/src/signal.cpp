#include "vsi/signal.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "vsi/error.hpp"
#include "vsi/summation.hpp"

namespace vsi {

namespace {

void check_rate(double sample_rate_hz) {
  if (!std::isfinite(sample_rate_hz) || sample_rate_hz <= 0.0) {
    throw Error(ErrorCategory::kInvalidSignal,
                "sample rate must be finite and > 0, got " +
                    std::to_string(sample_rate_hz));
  }
}

}  // namespace

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::kInvalidArgument: return "invalid_argument";
    case ErrorCategory::kInvalidSignal: return "invalid_signal";
    case ErrorCategory::kDegenerate: return "degenerate_input";
    case ErrorCategory::kFileNotFound: return "file_not_found";
    case ErrorCategory::kMalformedInput: return "malformed_input";
    case ErrorCategory::kMissingSampleRate: return "missing_sample_rate";
    case ErrorCategory::kIrregularTime: return "irregular_time";
    case ErrorCategory::kIo: return "io_error";
  }
  return "unknown";
}

Signal::Signal(std::vector<double> samples, double sample_rate_hz,
               std::string label, std::string units)
    : samples_(std::move(samples)),
      sample_rate_(sample_rate_hz),
      label_(std::move(label)),
      units_(std::move(units)) {
  if (samples_.empty()) {
    throw Error(ErrorCategory::kInvalidSignal, "signal has no samples");
  }
  check_rate(sample_rate_);
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(ErrorCategory::kInvalidSignal,
                  "non-finite sample at index " + std::to_string(i));
    }
  }
}

Signal Signal::scaled(double alpha) const {
  std::vector<double> out(samples_.begin(), samples_.end());
  for (double& v : out) v *= alpha;
  return Signal(std::move(out), sample_rate_, label_, units_);
}

PowerSignal::PowerSignal(std::vector<double> samples, double sample_rate_hz)
    : samples_(std::move(samples)), sample_rate_(sample_rate_hz) {
  if (samples_.empty()) {
    throw Error(ErrorCategory::kInvalidSignal, "power signal has no samples");
  }
  check_rate(sample_rate_);
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i]) || samples_[i] < 0.0) {
      throw Error(ErrorCategory::kInvalidSignal,
                  "power sample at index " + std::to_string(i) +
                      " is negative or non-finite");
    }
  }
}

TriaxialRecord::TriaxialRecord(Signal x_axis, Signal y_axis, Signal z_axis)
    : x(std::move(x_axis)), y(std::move(y_axis)), z(std::move(z_axis)) {
  if (x.size() != y.size() || x.size() != z.size()) {
    throw Error(ErrorCategory::kInvalidSignal,
                "triaxial channels differ in length");
  }
  if (x.sample_rate() != y.sample_rate() ||
      x.sample_rate() != z.sample_rate()) {
    throw Error(ErrorCategory::kInvalidSignal,
                "triaxial channels differ in sample rate");
  }
}

PowerSignal power_signal(const Signal& s) {
  std::vector<double> p;
  p.reserve(s.size());
  for (double a : s.samples()) p.push_back(a * a);
  return PowerSignal(std::move(p), s.sample_rate());
}

double rms(const Signal& s) {
  CompensatedSum acc;
  for (double a : s.samples()) acc.add(a * a);
  return std::sqrt(acc.value() / static_cast<double>(s.size()));
}

double total_energy(const PowerSignal& p) {
  return p.sample_interval() * compensated_sum(p.samples());
}

}  // namespace vsi
