#include "vsi/io/curves.hpp"

#include <algorithm>
#include <ostream>

#include "vsi/error.hpp"
#include "vsi/io/csv.hpp"
#include "vsi/summation.hpp"

namespace vsi::io {

CurveExport export_cumulative_curve(const Signal& s, std::size_t points) {
  if (points < 2) {
    throw Error(ErrorCategory::kInvalidArgument, "curve needs at least 2 points");
  }
  std::vector<double> sorted(s.size());
  std::transform(s.samples().begin(), s.samples().end(), sorted.begin(),
                 [](double a) { return a * a; });
  std::sort(sorted.begin(), sorted.end());
  const std::vector<double> partial = prefix_sums(sorted);
  const double total = partial.back();
  if (!(total > 0.0)) {
    throw Error(ErrorCategory::kDegenerate,
                "cumulative curve undefined for zero energy");
  }

  const std::size_t n = sorted.size();
  const std::size_t step = (n + points - 1) / points;
  const auto nd = static_cast<double>(n);
  CurveExport curve;
  for (std::size_t m = step; m <= n; m += step) {
    curve.x.push_back(static_cast<double>(m) / nd);
    curve.y.push_back(partial[m - 1] / total);
  }
  if (curve.x.empty() || curve.x.back() != 1.0) {
    curve.x.push_back(1.0);
    curve.y.push_back(1.0);
  }
  return curve;
}

CurveExport export_power_histogram(const PowerSignal& p, std::size_t bins) {
  if (bins < 1) {
    throw Error(ErrorCategory::kInvalidArgument, "histogram needs at least 1 bin");
  }
  const auto x = p.samples();
  const double top = *std::max_element(x.begin(), x.end());
  const double width = top / static_cast<double>(bins);

  CurveExport hist;
  hist.x.resize(bins);
  hist.y.assign(bins, 0.0);
  for (std::size_t b = 0; b < bins; ++b) {
    hist.x[b] = (static_cast<double>(b) + 0.5) * width;
  }
  for (double v : x) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = std::min(bins - 1, static_cast<std::size_t>(v / width));
    }
    hist.y[b] += 1.0;
  }
  return hist;
}

void write_curve_csv(std::ostream& out, const CurveExport& curve,
                     const std::string& x_name, const std::string& y_name) {
  out << x_name << ',' << y_name << '\n';
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    out << format_double(curve.x[i]) << ',' << format_double(curve.y[i]) << '\n';
  }
}

}  // namespace vsi::io
