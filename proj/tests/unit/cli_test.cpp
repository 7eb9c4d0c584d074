#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = vsi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  TempDir() : path(fs::temp_directory_path() / "vsi_cli_test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  fs::path path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("generate then analyze a harmonic") {
  TempDir dir;
  const auto csv = dir.file("harmonic.csv");
  auto r = run({"generate", "harmonic", "--fc", "100", "--amp", "3.58e-6", "--rate",
                "50000", "--dur", "10", "-o", csv});
  REQUIRE(r.code == 0);
  r = run({"analyze", csv});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["ax_ms2"]["cumulative"]["vsi"].get<double>() ==
        doctest::Approx(1.0).epsilon(0.01));
  CHECK(j["metadata"]["generator"] == "harmonic");
  CHECK(j["source"] == csv);
}

TEST_CASE("generate then analyze a pulse train") {
  TempDir dir;
  const auto csv = dir.file("pulses.csv");
  REQUIRE(run({"generate", "pulses", "--fc", "100", "--tp", "0.1", "-o", csv}).code == 0);
  const auto report = dir.file("pulses.json");
  REQUIRE(run({"analyze", csv, "-o", report}).code == 0);
  const auto j = nlohmann::json::parse(slurp(report));
  const auto& ch = j["results"]["ax_ms2"];
  CHECK(ch["cumulative"]["vsi"].get<double>() == doctest::Approx(17.7).epsilon(0.05));
  CHECK(ch["wms"]["vsi"].get<double>() == doctest::Approx(5.1).epsilon(0.05));

  // Same file, same config: identical output.
  const auto again = dir.file("again.json");
  REQUIRE(run({"analyze", csv, "-o", again}).code == 0);
  CHECK(slurp(again) == slurp(report));
}

TEST_CASE("noise reports echo the seed") {
  TempDir dir;
  const auto csv = dir.file("wgn.csv");
  REQUIRE(run({"generate", "wgn", "--seed", "1234", "--rate", "1000", "--dur", "5",
               "-o", csv}).code == 0);
  const auto r = run({"analyze", csv});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["metadata"]["seed"] == "1234");
  CHECK(j["metadata"]["rng"].get<std::string>().find("mt19937_64") != std::string::npos);
  CHECK(r.err.find("warning") != std::string::npos);  // 5000 < 1e5 samples
}

TEST_CASE("analyze config flags") {
  TempDir dir;
  const auto csv = dir.file("h.csv");
  REQUIRE(run({"generate", "harmonic", "--rate", "10000", "--dur", "1", "-o", csv}).code == 0);
  auto r = run({"analyze", csv, "--half-energy", "-K", "1", "--methods", "cumulative,wms",
                "--min-samples", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["threshold_ratio"] == 0.5);
  CHECK(j["config"]["K"] == 1.0);
  CHECK(j["results"]["ax_ms2"]["kurtosis_vsi"].is_null());
  CHECK(j["results"]["ax_ms2"]["wms"]["K"] == 1.0);
}

TEST_CASE("compare tabulates inputs in order") {
  TempDir dir;
  const auto a = dir.file("a.csv");
  const auto b = dir.file("b.csv");
  REQUIRE(run({"generate", "harmonic", "--rate", "10000", "--dur", "2", "-o", a}).code == 0);
  REQUIRE(run({"generate", "pulses", "--rate", "10000", "--dur", "2", "-o", b}).code == 0);
  const auto r = run({"compare", a, b});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("VSI") != std::string::npos);
  CHECK(r.out.find("cumulative") != std::string::npos);
  CHECK(r.out.find(a) < r.out.find(b));
}

TEST_CASE("export-curves writes both CSVs") {
  TempDir dir;
  const auto csv = dir.file("h.csv");
  REQUIRE(run({"generate", "harmonic", "--rate", "10000", "--dur", "1", "-o", csv}).code == 0);
  const auto prefix = dir.file("out");
  const auto r = run({"export-curves", csv, "--points", "100", "--bins", "10", "--prefix", prefix});
  REQUIRE(r.code == 0);
  const auto curve = slurp(prefix + "_cumulative.csv");
  CHECK(curve.rfind("sample_fraction,energy_fraction\n", 0) == 0);
  CHECK(curve.find("\n1,1\n") != std::string::npos);
  const auto hist = slurp(prefix + "_histogram.csv");
  CHECK(std::count(hist.begin(), hist.end(), '\n') == 11);
}

TEST_CASE("failures map to distinct exit codes") {
  using namespace vsi::cli;
  TempDir dir;
  auto r = run({"analyze", dir.file("missing.csv")});
  CHECK(r.code == kFileNotFound);
  CHECK(r.err.rfind("error[file_not_found]", 0) == 0);

  CHECK(run({"analyze", "x.csv", "--bogus"}).code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"analyze", "x.csv", "--threshold-ratio", "0.3", "--half-energy"}).code ==
        kInvalidCombination);

  const auto csv = dir.file("bad.csv");
  {
    std::ofstream out(csv);
    out << "time_s,ax_ms2\n0,1\n0.1,NaN\n";
  }
  r = run({"analyze", csv});
  CHECK(r.code == kIngestion);
  CHECK(r.err.find(":3:") != std::string::npos);

  const auto ok = dir.file("ok.csv");
  REQUIRE(run({"generate", "harmonic", "--rate", "1000", "--dur", "1", "-o", ok}).code == 0);
  CHECK(run({"analyze", ok, "--threshold-ratio", "1.5"}).code == kInvalidArgument);
  CHECK(run({"analyze", ok, "--methods", "peak"}).code == kInvalidArgument);
  CHECK(run({"generate", "harmonic", "--rate", "150"}).code == kInvalidArgument);
  CHECK(run({"generate", "pulses", "--rate", "1000"}).code == kInvalidArgument);

  const auto zero = dir.file("zero.csv");
  REQUIRE(run({"generate", "wgn", "--rms", "0", "--rate", "1000", "--dur", "1", "-o", zero}).code == 0);
  r = run({"analyze", zero});
  CHECK(r.code == 0);  // estimator failures are reported per method
  CHECK(nlohmann::json::parse(r.out)["results"]["ax_ms2"]["errors"].contains("cumulative"));
  CHECK(run({"export-curves", zero, "--prefix", dir.file("z")}).code == kDegenerate);
}

TEST_CASE("version and help") {
  auto r = run({"--version"});
  CHECK(r.code == 0);
  r = run({"analyze", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--threshold-ratio") != std::string::npos);
}
