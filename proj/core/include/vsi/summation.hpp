#pragma once

#include <span>
#include <vector>

namespace vsi {

/// Neumaier-compensated accumulator. Error stays O(eps) independent of the
/// number of terms, which long records (1e6..1e8 samples) need.
class CompensatedSum {
 public:
  void add(double value) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> values) noexcept;

/// Running compensated prefix sums; out[i] = values[0] + ... + values[i].
std::vector<double> prefix_sums(std::span<const double> values);

}  // namespace vsi
