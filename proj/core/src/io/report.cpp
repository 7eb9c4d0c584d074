#include "vsi/io/report.hpp"

#include <json.hpp>

#include "vsi/error.hpp"
#include "vsi/version.hpp"

namespace vsi::io {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Json cumulative_to_json(const CumulativeEnergyResult& r) {
  return Json{{"vsi", r.vsi},
              {"vsl", r.vsl},
              {"M", r.below},
              {"N", r.total},
              {"threshold_ratio", r.threshold_ratio},
              {"w_tot", r.total_energy}};
}

CumulativeEnergyResult cumulative_from_json(const Json& j) {
  CumulativeEnergyResult r;
  r.vsi = j.at("vsi").get<double>();
  r.vsl = j.at("vsl").get<double>();
  r.below = j.at("M").get<std::size_t>();
  r.total = j.at("N").get<std::size_t>();
  r.threshold_ratio = j.at("threshold_ratio").get<double>();
  r.total_energy = j.at("w_tot").get<double>();
  return r;
}

Json wms_to_json(const WmsResult& r) {
  return Json{{"vsi", r.vsi}, {"vsl", r.vsl}, {"K", r.exponent}, {"rms", r.rms}};
}

WmsResult wms_from_json(const Json& j) {
  WmsResult r;
  r.vsi = j.at("vsi").get<double>();
  r.vsl = j.at("vsl").get<double>();
  r.exponent = j.at("K").get<double>();
  r.rms = j.at("rms").get<double>();
  return r;
}

Json analysis_to_json(const ShockAnalysis& a) {
  Json j;
  j["rms"] = a.rms;
  j["kurtosis_vsi"] = optional_to_json(a.kurtosis_vsi);
  j["threshold_count_vsi"] = optional_to_json(a.threshold_count_vsi);
  j["energy_step"] = optional_to_json(a.energy_step);
  j["cumulative"] = a.cumulative ? cumulative_to_json(*a.cumulative) : Json(nullptr);
  j["wms"] = a.wms ? wms_to_json(*a.wms) : Json(nullptr);
  j["errors"] = Json::object();
  for (const auto& [method, message] : a.errors) j["errors"][method] = message;
  return j;
}

ShockAnalysis analysis_from_json(const Json& j) {
  ShockAnalysis a;
  a.rms = j.at("rms").get<double>();
  a.kurtosis_vsi = optional_from_json<double>(j.at("kurtosis_vsi"));
  a.threshold_count_vsi = optional_from_json<double>(j.at("threshold_count_vsi"));
  a.energy_step = optional_from_json<double>(j.at("energy_step"));
  if (!j.at("cumulative").is_null()) a.cumulative = cumulative_from_json(j["cumulative"]);
  if (!j.at("wms").is_null()) a.wms = wms_from_json(j["wms"]);
  for (const auto& [method, message] : j.at("errors").items()) {
    a.errors.emplace(method, message.get<std::string>());
  }
  return a;
}

Json config_to_json(const AnalysisConfig& c) {
  Json methods = Json::array();
  for (Method m : c.methods) methods.push_back(std::string(to_string(m)));
  return Json{{"threshold_ratio", c.threshold_ratio},
              {"K", c.wms_exponent},
              {"max_fraction", c.max_fraction},
              {"methods", methods}};
}

AnalysisConfig config_from_json(const Json& j) {
  AnalysisConfig c;
  c.threshold_ratio = j.at("threshold_ratio").get<double>();
  c.wms_exponent = j.at("K").get<double>();
  c.max_fraction = j.at("max_fraction").get<double>();
  c.methods.clear();
  for (const auto& name : j.at("methods")) {
    const auto m = parse_method(name.get<std::string>());
    if (!m) {
      throw Error(ErrorCategory::kMalformedInput,
                  "unknown method '" + name.get<std::string>() + "'");
    }
    c.methods.insert(*m);
  }
  return c;
}

}  // namespace

Report analyze_recording(const Recording& recording,
                         const AnalysisConfig& config,
                         std::size_t min_samples) {
  config.validate();
  Report r;
  r.tool_version = kVersion;
  r.source = recording.source;
  r.metadata = recording.metadata;
  r.sample_rate_hz = recording.sample_rate();
  r.n_samples = recording.size();
  r.config = config;
  for (const Signal* channel : recording.channels()) {
    r.results.push_back({channel->label(), analyze(*channel, config)});
  }
  if (const auto* tri = std::get_if<TriaxialRecord>(&recording.data)) {
    r.ahv = ahv(*tri);
  }
  if (r.n_samples < min_samples) {
    r.warnings.push_back("record has " + std::to_string(r.n_samples) +
                         " samples, fewer than the " +
                         std::to_string(min_samples) +
                         " recommended for stable VSI estimates");
  }
  return r;
}

std::string to_json(const Report& report) {
  Json j;
  j["schema_version"] = report.schema_version;
  j["tool_version"] = report.tool_version;
  j["source"] = report.source;
  j["metadata"] = Json::object();
  for (const auto& [k, v] : report.metadata) j["metadata"][k] = v;
  j["sample_rate_hz"] = report.sample_rate_hz;
  j["n_samples"] = report.n_samples;
  j["frequency_weighting"] = report.frequency_weighting;
  j["config"] = config_to_json(report.config);
  j["results"] = Json::object();
  for (const auto& channel : report.results) {
    j["results"][channel.name] = analysis_to_json(channel.analysis);
  }
  if (report.ahv) j["ahv"] = *report.ahv;
  j["warnings"] = report.warnings;
  return j.dump(2);
}

Report report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw Error(ErrorCategory::kMalformedInput,
                  "unsupported report schema_version " +
                      std::to_string(r.schema_version));
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    r.source = j.at("source").get<std::string>();
    for (const auto& [k, v] : j.at("metadata").items()) {
      r.metadata.emplace(k, v.get<std::string>());
    }
    r.sample_rate_hz = j.at("sample_rate_hz").get<double>();
    r.n_samples = j.at("n_samples").get<std::size_t>();
    r.frequency_weighting = j.at("frequency_weighting").get<std::string>();
    r.config = config_from_json(j.at("config"));
    for (const auto& [name, value] : j.at("results").items()) {
      r.results.push_back({name, analysis_from_json(value)});
    }
    if (j.contains("ahv")) r.ahv = j["ahv"].get<double>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCategory::kMalformedInput,
                std::string("invalid report: ") + e.what());
  }
}

}  // namespace vsi::io
