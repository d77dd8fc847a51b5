#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = PCD_CLI_PATH;
const std::string kConfigDir = PCD_CONFIG_DIR;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "pcd_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = temp_dir() / "stdout.txt";
  const std::string cmd = kCli + " " + args + " > " + out.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::string write_config(const std::string& name, const std::string& content) {
  const fs::path p = temp_dir() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze on the bundled prototype config") {
  const auto r = run("analyze --config " + kConfigDir + "/table3.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text.find("7560/39") != std::string::npos);
  CHECK(r.stdout_text.find("126/39") != std::string::npos);

  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["ratios"]["i_3khv"]["exact"] == "7560/39");
  CHECK(doc["ratios"]["i_khv"]["exact"] == "60");
  CHECK(doc["efficiency"]["eta_sr2"].get<double>() == doctest::Approx(0.620289009).epsilon(1e-8));
  CHECK(doc["efficiency"]["self_locking"] == false);
  // Operating point present, so the power-flow block is emitted.
  CHECK(doc["power_flow"]["input_stage"]["power_in_w"].get<double>() ==
        doctest::Approx(126.0).epsilon(1e-12));
  CHECK(doc["power_flow"]["overall"]["efficiency"].get<double>() ==
        doctest::Approx(0.620289009).epsilon(1e-8));
}

TEST_CASE("analyze report re-parses to the same values") {
  const auto r = run("analyze --config " + kConfigDir + "/table3.json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  const auto again = nlohmann::json::parse(doc.dump());
  CHECK(doc == again);
}

TEST_CASE("lossless config prints unit efficiencies") {
  const std::string cfg = write_config("lossless.json", R"({
    "geometry": {"z_s": 39, "z_p1": 24, "z_r1": 87, "n_planets": 3, "z_p2": 59, "z_r2": 60},
    "mesh_efficiency": 1.0
  })");
  const auto r = run("analyze --config " + cfg);
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["efficiency"]["eta_sr2"] == 1.0);
  CHECK(doc["efficiency"]["eta_r2s"] == 1.0);
}

TEST_CASE("constraint violation exits with code 3 and names the constraint") {
  const std::string cfg = write_config("badcyc.json", R"({
    "geometry": {"z_s": 39, "z_p1": 24, "z_r1": 87, "n_planets": 3, "z_p2": 58, "z_r2": 60},
    "mesh_efficiency": 0.99
  })");
  const fs::path err = temp_dir() / "stderr.txt";
  const std::string cmd =
      kCli + " analyze --config " + cfg + " > /dev/null 2> " + err.string();
  const int code = WEXITSTATUS(std::system(cmd.c_str()));
  CHECK(code == 3);
  CHECK(read_file(err).find("one-tooth") != std::string::npos);
}

TEST_CASE("malformed config exits with code 2") {
  const std::string cfg = write_config("broken.json", "{ not json");
  CHECK(run("analyze --config " + cfg).exit_code == 2);
  const std::string missing = write_config("missing.json", R"({"geometry": {"z_s": 39}})");
  CHECK(run("analyze --config " + missing).exit_code == 2);
}

TEST_CASE("csv analyze output is key-value rows") {
  const auto r = run("analyze --config " + kConfigDir + "/table3.json --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text.rfind("field,value\n", 0) == 0);
  CHECK(r.stdout_text.find("ratios.i_3khv.exact,\"7560/39\"") != std::string::npos);
}

TEST_CASE("sweep csv has a header and a lossless column of ones") {
  const fs::path out = temp_dir() / "sweep.csv";
  const auto r = run("sweep --config " + kConfigDir + "/sweep_khv_forward.json --format csv --out " +
                     out.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "ratio,eta_mesh=0.98,eta_mesh=0.99,eta_mesh=1");
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "1");
  }
  CHECK(rows == 99);
}

TEST_CASE("sweep rows match the closed form") {
  const std::string cfg = write_config("sweep_row.json", R"({
    "stage": "K-H-V", "direction": "forward",
    "ratio_grid": [60], "mesh_grid": [0.99]
  })");
  const auto r = run("sweep --config " + cfg);
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["values"][0][0].get<double>() == doctest::Approx(0.628930818).epsilon(1e-8));
}

TEST_CASE("repeated sweep runs are byte-identical") {
  const fs::path a = temp_dir() / "sweep_a.csv";
  const fs::path b = temp_dir() / "sweep_b.csv";
  REQUIRE(run("sweep --config " + kConfigDir + "/sweep_khv_forward.json --format csv --out " +
              a.string())
              .exit_code == 0);
  REQUIRE(run("sweep --config " + kConfigDir + "/sweep_khv_forward.json --format csv --out " +
              b.string())
              .exit_code == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(!read_file(a).empty());
}

TEST_CASE("search finds the prototype row") {
  const auto r = run("search --config " + kConfigDir + "/search_ratio194.json --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text.find("39,24,87,59,60,3,7560/39") != std::string::npos);
}

TEST_CASE("repeated search runs are byte-identical") {
  const fs::path a = temp_dir() / "search_a.csv";
  const fs::path b = temp_dir() / "search_b.csv";
  REQUIRE(run("search --config " + kConfigDir + "/search_ratio194.json --format csv --out " +
              a.string())
              .exit_code == 0);
  REQUIRE(run("search --config " + kConfigDir + "/search_ratio194.json --format csv --out " +
              b.string())
              .exit_code == 0);
  CHECK(read_file(a) == read_file(b));
}

TEST_CASE("empty search result exits with code 4") {
  const std::string cfg = write_config("infeasible.json", R"({
    "target_ratio": 193.8, "ratio_tolerance": 0.0,
    "bounds": {"z_s": [2, 3], "z_p1": [2, 3], "z_p2": [2, 3]},
    "n_planets": 1
  })");
  const auto r = run("search --config " + cfg);
  CHECK(r.exit_code == 4);
}

TEST_CASE("unknown subcommand or missing option fails with a usage error") {
  CHECK(run("frobnicate").exit_code != 0);
  CHECK(run("analyze").exit_code != 0);
}
