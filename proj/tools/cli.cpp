#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vsi/error.hpp"
#include "vsi/io/csv.hpp"
#include "vsi/io/curves.hpp"
#include "vsi/io/report.hpp"
#include "vsi/model_signals.hpp"
#include "vsi/shock_metrics.hpp"
#include "vsi/version.hpp"

namespace vsi::cli {

namespace {

using io::format_double;

struct GenerateOptions {
  double frequency_hz = 100.0;
  double amplitude_m = 3.58e-6;
  double phase_rad = 0.0;
  double separation_s = 0.1;
  double target_rms = 1.0;
  std::uint64_t seed = 1;
  double rate_hz = 50000.0;
  double duration_s = 10.0;
  std::string output;
};

struct InputOptions {
  std::optional<double> rate_hz;
  std::optional<std::string> channel;

  io::CsvOptions csv() const { return {rate_hz, channel}; }
};

struct ConfigOptions {
  std::optional<double> threshold_ratio;
  bool half_energy = false;
  double wms_exponent = kDefaultWmsExponent;
  double max_fraction = kDefaultMaxFraction;
  std::vector<std::string> methods;

  AnalysisConfig build() const {
    AnalysisConfig c;
    if (threshold_ratio) c.threshold_ratio = *threshold_ratio;
    if (half_energy) c.threshold_ratio = kHalfEnergyThresholdRatio;
    c.wms_exponent = wms_exponent;
    c.max_fraction = max_fraction;
    if (!methods.empty()) {
      c.methods.clear();
      for (const auto& name : methods) {
        const auto m = parse_method(name);
        if (!m) {
          throw Error(ErrorCategory::kInvalidArgument,
                      "unknown method '" + name + "'");
        }
        c.methods.insert(*m);
      }
    }
    c.validate();
    return c;
  }
};

void add_input_flags(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--rate", in.rate_hz,
                 "Sample rate in Hz (overrides rate_hz and time column)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--channel", in.channel,
                 "Acceleration column to analyze (name or 0-based index)");
}

void add_config_flags(CLI::App& cmd, ConfigOptions& c) {
  auto* ratio = cmd.add_option("--threshold-ratio", c.threshold_ratio,
                               "Cumulative-energy threshold W_th/W_tot "
                               "(default 1/2 - 1/pi)");
  auto* half = cmd.add_flag("--half-energy", c.half_energy,
                            "Use 50 % of the total energy as threshold");
  ratio->excludes(half);
  half->excludes(ratio);
  cmd.add_option("-K,--wms-exponent", c.wms_exponent,
                 "Weight exponent for the weighted mean square")
      ->capture_default_str();
  cmd.add_option("--max-fraction", c.max_fraction,
                 "Threshold-count level as a fraction of max power")
      ->capture_default_str();
  cmd.add_option("--methods", c.methods,
                 "Comma-separated subset of kurtosis,threshold_count,"
                 "energy_step,cumulative,wms")
      ->delimiter(',');
}

std::ostream& open_output(const std::string& path, std::ofstream& file,
                          std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw Error(ErrorCategory::kIo, path + ": cannot open for writing");
  return file;
}

void finish_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return;
  file.close();
  if (!file) throw Error(ErrorCategory::kIo, path + ": write failed");
}

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kInvalidArgument: return kInvalidArgument;
    case ErrorCategory::kFileNotFound: return kFileNotFound;
    case ErrorCategory::kInvalidSignal:
    case ErrorCategory::kMalformedInput:
    case ErrorCategory::kMissingSampleRate:
    case ErrorCategory::kIrregularTime: return kIngestion;
    case ErrorCategory::kDegenerate: return kDegenerate;
    case ErrorCategory::kIo: return kIo;
  }
  return kInternal;
}

// ---- generate ---------------------------------------------------------

void write_generated(const Signal& s, std::map<std::string, std::string> meta,
                     const GenerateOptions& g, std::ostream& out) {
  meta["duration_s"] = format_double(g.duration_s);
  meta["measured_rms"] = format_double(rms(s));
  meta["tool_version"] = kVersion;
  std::ofstream file;
  io::write_csv(open_output(g.output, file, out), s, meta);
  finish_output(g.output, file);
}

void generate_harmonic(const GenerateOptions& g, std::ostream& out) {
  const HarmonicParams p{g.amplitude_m, g.frequency_hz, g.phase_rad};
  const Signal s = gen_harmonic(p, g.rate_hz, g.duration_s);
  write_generated(s,
                  {{"generator", "harmonic"},
                   {"amplitude_m", format_double(p.amplitude_m)},
                   {"frequency_hz", format_double(p.frequency_hz)},
                   {"phase_rad", format_double(p.phase_rad)}},
                  g, out);
}

void generate_pulses(const GenerateOptions& g, std::ostream& out,
                     std::ostream& err) {
  const PulseTrainParams p{g.frequency_hz, g.separation_s, g.amplitude_m};
  const Signal s = gen_pulse_train(p, g.rate_hz, g.duration_s);
  if (!p.is_pulsed()) {
    err << "warning: pulse width / separation = "
        << format_double(p.width_ratio())
        << " exceeds 0.1; RMS matching to the reference harmonic is "
           "approximate (see measured_rms)\n";
  }
  const double target = std::sqrt(8.0) * std::pow(std::numbers::pi, 2) *
                        g.frequency_hz * g.frequency_hz * g.amplitude_m;
  write_generated(s,
                  {{"generator", "pulse_train"},
                   {"frequency_hz", format_double(p.frequency_hz)},
                   {"separation_s", format_double(p.separation_s)},
                   {"reference_amplitude_m", format_double(p.reference_amplitude_m)},
                   {"pulse_width_s", format_double(p.pulse_width())},
                   {"pulse_amplitude_m", format_double(p.pulse_amplitude())},
                   {"target_rms", format_double(target)}},
                  g, out);
}

void generate_wgn(const GenerateOptions& g, std::ostream& out) {
  const Signal s = gen_wgn(g.target_rms, g.rate_hz, g.duration_s, g.seed);
  write_generated(s,
                  {{"generator", "wgn"},
                   {"target_rms", format_double(g.target_rms)},
                   {"seed", std::to_string(g.seed)},
                   {"rng", kNoiseAlgorithm}},
                  g, out);
}

// ---- analyze / compare ------------------------------------------------

void emit_warnings(const io::Report& r, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << r.source << ": " << w << '\n';
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::setprecision(6) << *v;
  return s.str();
}

void print_comparison(const std::vector<io::Report>& reports, std::ostream& out) {
  struct Row {
    std::string input, channel, method, vsi, vsl;
  };
  std::vector<Row> rows;
  for (const auto& r : reports) {
    for (const auto& ch : r.results) {
      const auto& a = ch.analysis;
      const auto& m = r.config.methods;
      rows.push_back({r.source, ch.name, "rms", "-", cell(a.rms)});
      if (m.contains(Method::kKurtosis)) {
        rows.push_back({r.source, ch.name, "kurtosis", cell(a.kurtosis_vsi), "-"});
      }
      if (m.contains(Method::kThresholdCount)) {
        rows.push_back({r.source, ch.name, "threshold_count",
                        cell(a.threshold_count_vsi), "-"});
      }
      if (m.contains(Method::kCumulative)) {
        rows.push_back({r.source, ch.name, "cumulative",
                        cell(a.cumulative ? std::optional(a.cumulative->vsi) : std::nullopt),
                        cell(a.cumulative ? std::optional(a.cumulative->vsl) : std::nullopt)});
      }
      if (m.contains(Method::kWms)) {
        rows.push_back({r.source, ch.name, "wms",
                        cell(a.wms ? std::optional(a.wms->vsi) : std::nullopt),
                        cell(a.wms ? std::optional(a.wms->vsl) : std::nullopt)});
      }
    }
    if (r.ahv) rows.push_back({r.source, "ahv", "rms", "-", cell(r.ahv)});
  }

  Row header{"input", "channel", "method", "VSI", "VSL [m/s^2]"};
  std::array<std::size_t, 5> width{};
  const auto widen = [&](const Row& row) {
    const std::array<const std::string*, 5> f{&row.input, &row.channel, &row.method,
                                              &row.vsi, &row.vsl};
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], f[i]->size());
  };
  widen(header);
  for (const auto& row : rows) widen(row);
  const auto print = [&](const Row& row) {
    out << std::left << std::setw(static_cast<int>(width[0])) << row.input << "  "
        << std::setw(static_cast<int>(width[1])) << row.channel << "  "
        << std::setw(static_cast<int>(width[2])) << row.method << "  " << std::right
        << std::setw(static_cast<int>(width[3])) << row.vsi << "  "
        << std::setw(static_cast<int>(width[4])) << row.vsl << '\n';
  };
  print(header);
  for (const auto& row : rows) print(row);
}

// ---- export-curves ----------------------------------------------------

void export_curves(const io::Recording& rec, std::size_t points, std::size_t bins,
                   const std::string& prefix, std::ostream& out) {
  const bool multi = rec.channels().size() > 1;
  for (const Signal* ch : rec.channels()) {
    const std::string base = multi ? prefix + "_" + ch->label() : prefix;
    const auto curve = io::export_cumulative_curve(*ch, points);
    const auto hist = io::export_power_histogram(power_signal(*ch), bins);

    const std::string curve_path = base + "_cumulative.csv";
    std::ofstream cf(curve_path);
    if (!cf) throw Error(ErrorCategory::kIo, curve_path + ": cannot open for writing");
    io::write_curve_csv(cf, curve, "sample_fraction", "energy_fraction");
    finish_output(curve_path, cf);

    const std::string hist_path = base + "_histogram.csv";
    std::ofstream hf(hist_path);
    if (!hf) throw Error(ErrorCategory::kIo, hist_path + ": cannot open for writing");
    io::write_curve_csv(hf, hist, "power_m2s4", "count");
    finish_output(hist_path, hf);

    out << curve_path << '\n' << hist_path << '\n';
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vibration shock index (VSI) and shock level (VSL) toolkit", "vsi"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // generate
  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a model signal as CSV");
  generate->require_subcommand(1);
  const auto add_time_base = [&](CLI::App* cmd) {
    cmd->add_option("--rate", gen.rate_hz, "Sample rate in Hz")->capture_default_str();
    cmd->add_option("--dur", gen.duration_s, "Duration in s")->capture_default_str();
    cmd->add_option("-o,--output", gen.output, "Output CSV (default stdout)");
  };
  auto* harmonic = generate->add_subcommand("harmonic", "x(t) = A cos(2 pi f t + phi)");
  harmonic->add_option("--fc", gen.frequency_hz, "Frequency in Hz")->capture_default_str();
  harmonic->add_option("--amp", gen.amplitude_m, "Position amplitude in m")->capture_default_str();
  harmonic->add_option("--phase", gen.phase_rad, "Phase in rad")->capture_default_str();
  add_time_base(harmonic);

  auto* pulses = generate->add_subcommand("pulses", "Gaussian position pulse train");
  pulses->add_option("--fc", gen.frequency_hz, "Spectral peak frequency in Hz")
      ->capture_default_str();
  pulses->add_option("--tp", gen.separation_s, "Pulse separation in s")->capture_default_str();
  pulses->add_option("--amp", gen.amplitude_m,
                     "Reference harmonic amplitude in m (sets the RMS)")
      ->capture_default_str();
  add_time_base(pulses);

  auto* wgn = generate->add_subcommand("wgn", "White Gaussian noise");
  wgn->add_option("--rms", gen.target_rms, "Target RMS in m/s^2")->capture_default_str();
  wgn->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  add_time_base(wgn);

  // analyze
  std::string analyze_path;
  std::string report_path;
  std::size_t min_samples = 100000;
  InputOptions analyze_in;
  ConfigOptions analyze_cfg;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a CSV record, write a JSON report");
  analyze_cmd->add_option("input", analyze_path, "Input CSV")->required();
  analyze_cmd->add_option("-o,--output", report_path, "Report path (default stdout)");
  analyze_cmd->add_option("--min-samples", min_samples,
                          "Warn when the record is shorter than this")
      ->capture_default_str();
  add_input_flags(*analyze_cmd, analyze_in);
  add_config_flags(*analyze_cmd, analyze_cfg);

  // compare
  std::vector<std::string> compare_paths;
  InputOptions compare_in;
  ConfigOptions compare_cfg;
  auto* compare = app.add_subcommand("compare", "Tabulate VSI/VSL for several records");
  compare->add_option("inputs", compare_paths, "Input CSV files")->required()->expected(2, -1);
  add_input_flags(*compare, compare_in);
  add_config_flags(*compare, compare_cfg);

  // export-curves
  std::string curves_path;
  std::string prefix;
  std::size_t points = 1000;
  std::size_t bins = 50;
  InputOptions curves_in;
  auto* curves = app.add_subcommand(
      "export-curves", "Write cumulative-energy curve and power histogram CSVs");
  curves->add_option("input", curves_path, "Input CSV")->required();
  curves->add_option("--points", points, "Points in the cumulative curve")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  curves->add_option("--bins", bins, "Histogram bins")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  curves->add_option("--prefix", prefix, "Output path prefix (default: input stem)");
  add_input_flags(*curves, curves_in);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::RequiresError& e) {
    err << "error[invalid_combination]: " << e.what() << '\n';
    return kInvalidCombination;
  } catch (const CLI::ExcludesError& e) {
    err << "error[invalid_combination]: " << e.what() << '\n';
    return kInvalidCombination;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate) {
      if (*harmonic) generate_harmonic(gen, out);
      if (*pulses) generate_pulses(gen, out, err);
      if (*wgn) generate_wgn(gen, out);
    } else if (*analyze_cmd) {
      const auto config = analyze_cfg.build();
      const auto rec = io::read_csv(analyze_path, analyze_in.csv());
      const auto report = io::analyze_recording(rec, config, min_samples);
      emit_warnings(report, err);
      std::ofstream file;
      open_output(report_path, file, out) << io::to_json(report) << '\n';
      finish_output(report_path, file);
    } else if (*compare) {
      const auto config = compare_cfg.build();
      std::vector<std::future<io::Report>> jobs;
      for (const auto& path : compare_paths) {
        jobs.push_back(std::async(std::launch::async, [&, path] {
          return io::analyze_recording(io::read_csv(path, compare_in.csv()), config);
        }));
      }
      std::vector<io::Report> reports;
      for (auto& job : jobs) reports.push_back(job.get());
      for (const auto& r : reports) emit_warnings(r, err);
      print_comparison(reports, out);
    } else if (*curves) {
      const auto rec = io::read_csv(curves_path, curves_in.csv());
      if (prefix.empty()) {
        prefix = std::filesystem::path(curves_path).replace_extension().string();
      }
      export_curves(rec, points, bins, prefix, out);
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.category()) << "]: " << e.what() << '\n';
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace vsi::cli
