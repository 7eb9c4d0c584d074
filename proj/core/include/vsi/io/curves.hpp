#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "vsi/signal.hpp"

namespace vsi::io {

/// Plot-ready point sequence; x and y have equal length.
struct CurveExport {
  std::vector<double> x;
  std::vector<double> y;
};

/// Normalized cumulative energy of the ascending-sorted power against the
/// normalized sample index M / N. Decimated to at most `points` points by
/// keeping every ceil(N / points)-th partial sum plus the last, so the curve
/// is non-decreasing and ends at (1, 1) exactly.
CurveExport export_cumulative_curve(const Signal& s, std::size_t points);

/// Equal-width histogram of the power over [0, max(P)]; x holds bin
/// centres, y holds counts summing to N. The maximum lands in the last bin.
CurveExport export_power_histogram(const PowerSignal& p, std::size_t bins);

void write_curve_csv(std::ostream& out, const CurveExport& curve,
                     const std::string& x_name, const std::string& y_name);

}  // namespace vsi::io
