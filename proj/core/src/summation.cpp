#include "vsi/summation.hpp"

#include <cmath>

namespace vsi {

void CompensatedSum::add(double value) noexcept {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

std::vector<double> prefix_sums(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  CompensatedSum acc;
  for (double v : values) {
    acc.add(v);
    out.push_back(acc.value());
  }
  return out;
}

}  // namespace vsi
