#include "vsi/io/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

#include "vsi/error.hpp"

namespace vsi::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string at_line(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

void parse_comment(std::string_view body,
                   std::map<std::string, std::string>& metadata) {
  const auto sep = body.find_first_of("=:");
  if (sep == std::string_view::npos) return;
  const auto key = trim(body.substr(0, sep));
  const auto value = trim(body.substr(sep + 1));
  if (key.empty() || key.find(' ') != std::string_view::npos) return;
  metadata[std::string(key)] = std::string(value);
}

double infer_rate(const std::vector<double>& time, const std::string& source) {
  if (time.size() < 2) {
    throw Error(ErrorCategory::kMissingSampleRate,
                source + ": cannot infer sample rate from fewer than 2 rows");
  }
  std::vector<double> steps(time.size() - 1);
  for (std::size_t i = 1; i < time.size(); ++i) {
    steps[i - 1] = time[i] - time[i - 1];
  }
  std::vector<double> sorted = steps;
  const auto mid =
      sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const double median = *mid;
  if (!(median > 0.0)) {
    throw Error(ErrorCategory::kIrregularTime,
                source + ": time column is not increasing");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (std::abs(steps[i] - median) > kMaxTimeJitter * median) {
      throw Error(ErrorCategory::kIrregularTime,
                  source + ": time step into data row " + std::to_string(i + 2) +
                      " deviates from the median step by more than " +
                      format_double(kMaxTimeJitter * 100.0) + " %");
    }
  }
  return 1.0 / median;
}

}  // namespace

std::vector<const Signal*> Recording::channels() const {
  if (const auto* tri = std::get_if<TriaxialRecord>(&data)) {
    return {&tri->x, &tri->y, &tri->z};
  }
  return {&std::get<Signal>(data)};
}

Recording read_csv(const std::string& path, const CsvOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCategory::kFileNotFound, path + ": no such file");
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::kIo, path + ": cannot open for reading");
  return parse_csv(in, options, path);
}

Recording parse_csv(std::istream& in, const CsvOptions& options,
                    const std::string& source) {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::size_t line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      parse_comment(text.substr(1), metadata);
      continue;
    }
    const auto fields = split(text);

    if (columns.empty()) {
      // First data-bearing line is a header if any field is not a number.
      const bool header =
          std::any_of(fields.begin(), fields.end(), [](std::string_view f) {
            return !parse_number(f).has_value();
          });
      columns.resize(fields.size());
      if (header) {
        for (auto f : fields) names.emplace_back(f);
        continue;
      }
    }
    if (fields.size() != columns.size()) {
      throw Error(ErrorCategory::kMalformedInput,
                  at_line(source, line_no) + "expected " +
                      std::to_string(columns.size()) + " columns, found " +
                      std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const auto value = parse_number(fields[c]);
      if (!value) {
        throw Error(ErrorCategory::kMalformedInput,
                    at_line(source, line_no) + "cannot parse '" +
                        std::string(fields[c]) + "' as a number");
      }
      if (!std::isfinite(*value)) {
        throw Error(ErrorCategory::kInvalidSignal,
                    at_line(source, line_no) + "non-finite value '" +
                        std::string(fields[c]) + "'");
      }
      columns[c].push_back(*value);
    }
  }
  if (columns.empty() || columns.front().empty()) {
    throw Error(ErrorCategory::kMalformedInput, source + ": no data rows");
  }

  std::optional<std::size_t> time_col;
  if (!names.empty()) {
    const auto it = std::find(names.begin(), names.end(), kTimeColumn);
    if (it != names.end()) {
      time_col = static_cast<std::size_t>(it - names.begin());
    }
  } else {
    const std::size_t n = columns.size();
    if (n > 4) {
      throw Error(ErrorCategory::kMalformedInput,
                  source + ": " + std::to_string(n) +
                      " unnamed columns; add a header row");
    }
    if (n == 2 || n == 4) {
      time_col = 0;
      names.emplace_back(kTimeColumn);
    }
    if (n <= 2) {
      names.emplace_back("ax_ms2");
    } else {
      names.insert(names.end(), {"ax_ms2", "ay_ms2", "az_ms2"});
    }
  }

  std::vector<std::size_t> accel;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (!time_col || c != *time_col) accel.push_back(c);
  }

  double rate = 0.0;
  if (options.sample_rate_hz) {
    rate = *options.sample_rate_hz;
  } else if (const auto it = metadata.find(kRateKey); it != metadata.end()) {
    const auto value = parse_number(it->second);
    if (!value) {
      throw Error(ErrorCategory::kMalformedInput,
                  source + ": invalid rate_hz '" + it->second + "'");
    }
    rate = *value;
  } else if (time_col) {
    rate = infer_rate(columns[*time_col], source);
  } else {
    throw Error(ErrorCategory::kMissingSampleRate,
                source + ": no sample rate (no rate_hz, time column or flag)");
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorCategory::kInvalidArgument,
                source + ": sample rate must be finite and > 0");
  }

  const auto make_signal = [&](std::size_t c) {
    return Signal(std::move(columns[c]), rate, names[c]);
  };
  const auto select = [&]() -> std::variant<Signal, TriaxialRecord> {
    if (options.channel) {
      for (std::size_t c : accel) {
        if (names[c] == *options.channel) return make_signal(c);
      }
      const auto index = parse_number(*options.channel);
      if (index && *index >= 0.0 && std::floor(*index) == *index &&
          *index < static_cast<double>(accel.size())) {
        return make_signal(accel[static_cast<std::size_t>(*index)]);
      }
      throw Error(ErrorCategory::kInvalidArgument,
                  source + ": no acceleration channel '" + *options.channel +
                      "'");
    }
    if (accel.size() == 1) return make_signal(accel[0]);
    if (accel.size() == 3) {
      return TriaxialRecord(make_signal(accel[0]), make_signal(accel[1]),
                            make_signal(accel[2]));
    }
    throw Error(ErrorCategory::kMalformedInput,
                source + ": " + std::to_string(accel.size()) +
                    " acceleration columns; expected 1 or 3, or select a "
                    "channel");
  };

  return Recording{select(), std::move(metadata), source};
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Signal& s,
               const std::map<std::string, std::string>& metadata,
               const std::string& column) {
  out << "# " << kRateKey << '=' << format_double(s.sample_rate()) << '\n';
  for (const auto& [key, value] : metadata) {
    if (key == kRateKey) continue;
    out << "# " << key << '=' << value << '\n';
  }
  out << kTimeColumn << ',' << column << '\n';
  const auto x = s.samples();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << format_double(static_cast<double>(i) / s.sample_rate()) << ','
        << format_double(x[i]) << '\n';
  }
}

}  // namespace vsi::io
